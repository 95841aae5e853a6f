//! Small named instances shared by the test suites and the examples.

use crate::graph::Graph;
use crate::matrix::ZeroOneMatrix;
use crate::web::{web_graph, WebParams};

/// Seven-vertex co-biconvex graph: two triangle cliques {1,2,3} and {4,5,6}
/// joined by a staircase of crossing edges, plus the universal vertex 7.
/// Its independence numbers after peeling are 2 and 1.
pub fn cobiconvex7() -> Graph {
    Graph::from_edges(
        7,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 7),
            (2, 3),
            (2, 7),
            (3, 5),
            (3, 6),
            (3, 7),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
        ],
    )
    .unwrap()
}

/// The augmented adjacency matrix of [`cobiconvex7`] in its block layout.
pub fn cobiconvex7_matrix() -> ZeroOneMatrix {
    ZeroOneMatrix::from_rows(&[
        "1111001", "1110001", "1110111", "1001111", "0011111", "0011111", "1111111",
    ])
}

/// Five-vertex proper interval graph: its augmented adjacency matrix has
/// consecutive ones for columns (but not consecutive zeros).
pub fn proper_interval5() -> Graph {
    Graph::from_edges(5, &[(1, 4), (2, 4), (2, 5), (3, 5), (4, 5)]).unwrap()
}

pub fn proper_interval5_matrix() -> ZeroOneMatrix {
    ZeroOneMatrix::from_rows(&["10010", "01011", "00101", "11011", "01111"])
}

/// Six-vertex concave-round graph that is neither co-biconvex nor proper
/// interval nor a web.
pub fn concave_round6() -> Graph {
    Graph::from_edges(
        6,
        &[
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 6),
            (4, 5),
            (4, 6),
        ],
    )
    .unwrap()
}

/// The web on 7 vertices with 2 neighbors per side; concave-round but not
/// co-biconvex.
pub fn web7_2() -> Graph {
    web_graph(&WebParams::new(7, 2).unwrap())
}

/// The augmented adjacency matrix of the web on 15 vertices with 4
/// neighbors per side: a circulant band of width 9.
pub fn web15_4_matrix() -> ZeroOneMatrix {
    ZeroOneMatrix::from_rows(&[
        "111110000001111",
        "111111000000111",
        "111111100000011",
        "111111110000001",
        "111111111000000",
        "011111111100000",
        "001111111110000",
        "000111111111000",
        "000011111111100",
        "000001111111110",
        "000000111111111",
        "100000011111111",
        "110000001111111",
        "111000000111111",
        "111100000011111",
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_matrices_match_graphs() {
        assert_eq!(cobiconvex7().augmented_adjacency(), cobiconvex7_matrix());
        assert_eq!(
            proper_interval5().augmented_adjacency(),
            proper_interval5_matrix()
        );
        let p = WebParams::new(15, 4).unwrap();
        assert_eq!(web_graph(&p).augmented_adjacency(), web15_4_matrix());
    }

    #[test]
    fn fixture_shapes() {
        assert_eq!(cobiconvex7().universal_vertices(), vec![7]);
        assert!(concave_round6().augmented_adjacency().is_symmetric());
        assert_eq!(web7_2().vertex_count(), 7);
    }
}

//! Published example data, transcribed by hand.

use std::collections::BTreeMap;

use tqchar::fm::ColoredGraph;
use tqchar::tlaurent::quantum_integer;
use tqchar::{Monomial, TPoly};

pub fn mono(s: &str) -> Monomial {
    s.parse().unwrap()
}

/// Out-edge labels `(colour, step)` of a vertex, sorted.
pub fn out_labels(g: &ColoredGraph, m: &Monomial) -> Vec<(usize, i32)> {
    let i = g.vertices.iter().position(|(x, _)| x == m).expect("vertex present");
    let mut v: Vec<_> = g
        .edges
        .iter()
        .filter(|e| e.from == i)
        .map(|e| (e.color, e.at.step))
        .collect();
    v.sort();
    v
}

/// Arrow labels `(colour, step)`.
pub type Labels = &'static [(usize, i32)];

/// Vertex, coefficient `[n]_t`, and the labels of the arrows leaving it.
pub const D4_NODE2: &[(&str, u32, Labels)] = &[
    ("Y[2,0]", 1, &[(2, 1)]),
    ("Y[1,1] Y[2,2]^-1 Y[3,1] Y[4,1]", 1, &[(1, 2), (3, 2), (4, 2)]),
    ("Y[1,1] Y[3,3]^-1 Y[4,1]", 1, &[(1, 2), (4, 2)]),
    ("Y[1,3]^-1 Y[3,1] Y[4,1]", 1, &[(3, 2), (4, 2)]),
    ("Y[1,1] Y[3,1] Y[4,3]^-1", 1, &[(1, 2), (3, 2)]),
    ("Y[1,3]^-1 Y[2,2] Y[3,3]^-1 Y[4,1]", 1, &[(2, 3), (4, 2)]),
    ("Y[1,1] Y[2,2] Y[3,3]^-1 Y[4,3]^-1", 1, &[(1, 2), (2, 3)]),
    ("Y[1,3]^-1 Y[2,2] Y[3,1] Y[4,3]^-1", 1, &[(2, 3), (3, 2)]),
    ("Y[2,4]^-1 Y[4,1] Y[4,3]", 1, &[(4, 2), (4, 4)]),
    ("Y[1,1] Y[1,3] Y[2,4]^-1", 1, &[(1, 2), (1, 4)]),
    ("Y[1,3]^-1 Y[2,2]^2 Y[3,3]^-1 Y[4,3]^-1", 1, &[(2, 3)]),
    ("Y[2,4]^-1 Y[3,1] Y[3,3]", 1, &[(3, 2), (3, 4)]),
    ("Y[4,1] Y[4,5]^-1", 1, &[(4, 2)]),
    ("Y[1,1] Y[1,5]^-1", 1, &[(1, 2)]),
    ("Y[2,2] Y[2,4]^-1", 2, &[(2, 3)]),
    ("Y[3,1] Y[3,5]^-1", 1, &[(3, 2)]),
    ("Y[2,2] Y[4,3]^-1 Y[4,5]^-1", 1, &[(2, 3)]),
    ("Y[1,3]^-1 Y[1,5]^-1 Y[2,2]", 1, &[(2, 3)]),
    ("Y[1,3] Y[2,4]^-2 Y[3,3] Y[4,3]", 1, &[(1, 4), (3, 4), (4, 4)]),
    ("Y[2,2] Y[3,3]^-1 Y[3,5]^-1", 1, &[(2, 3)]),
    ("Y[1,3] Y[2,4]^-1 Y[3,3] Y[4,5]^-1", 1, &[(1, 4), (3, 4)]),
    ("Y[1,5]^-1 Y[2,4]^-1 Y[3,3] Y[4,3]", 1, &[(3, 4), (4, 4)]),
    ("Y[1,3] Y[2,4]^-1 Y[3,5]^-1 Y[4,3]", 1, &[(1, 4), (4, 4)]),
    ("Y[1,5]^-1 Y[3,3] Y[4,5]^-1", 1, &[(3, 4)]),
    ("Y[1,3] Y[3,5]^-1 Y[4,5]^-1", 1, &[(1, 4)]),
    ("Y[1,5]^-1 Y[3,5]^-1 Y[4,3]", 1, &[(4, 4)]),
    ("Y[1,5]^-1 Y[2,4] Y[3,5]^-1 Y[4,5]^-1", 1, &[(2, 5)]),
    ("Y[2,6]^-1", 1, &[]),
];

/// The l-fundamental module at node 2 of A3 and the arrows leaving each
/// vertex.
pub const A3_NODE2: &[(&str, Labels)] = &[
    ("Y[2,0]", &[(2, 1)]),
    ("Y[1,1] Y[2,2]^-1 Y[3,1]", &[(1, 2), (3, 2)]),
    ("Y[1,3]^-1 Y[3,1]", &[(3, 2)]),
    ("Y[1,1] Y[3,3]^-1", &[(1, 2)]),
    ("Y[1,3]^-1 Y[2,2] Y[3,3]^-1", &[(2, 3)]),
    ("Y[2,4]^-1", &[]),
];

/// The standard module with highest monomial `Y[1,0] Y[2,1]^2` in A2: vertex,
/// `[n]_t`, and an extra constant added to it.
pub const A2_MODULE: &[(&str, u32, i64)] = &[
    ("Y[1,0] Y[2,1]^2", 1, 0),
    ("Y[1,2]^-1 Y[2,1]^3", 1, 0),
    ("Y[1,0] Y[1,2] Y[2,1] Y[2,3]^-1", 2, 0),
    ("Y[1,0] Y[1,4]^-1 Y[2,1]", 2, 0),
    ("Y[2,1]^2 Y[2,3]^-1", 3, 0),
    ("Y[1,0] Y[1,2]^2 Y[2,3]^-2", 1, 0),
    ("Y[1,2]^-1 Y[1,4]^-1 Y[2,1]^2", 2, 0),
    ("Y[1,2] Y[2,1] Y[2,3]^-2", 3, 0),
    ("Y[1,0] Y[1,2] Y[1,4]^-1 Y[2,3]^-1", 2, 0),
    ("Y[1,2]^2 Y[2,3]^-3", 1, 0),
    ("Y[1,4]^-1 Y[2,1] Y[2,3]^-1", 3, 1),
    ("Y[1,0] Y[1,4]^-2", 1, 0),
    ("Y[1,2] Y[1,4]^-1 Y[2,3]^-2", 2, 0),
    ("Y[1,2]^-1 Y[1,4]^-2 Y[2,1]", 1, 0),
    ("Y[1,4]^-2 Y[2,3]^-1", 1, 0),
];

pub fn a2_module_expected() -> BTreeMap<Monomial, TPoly> {
    A2_MODULE
        .iter()
        .map(|&(m, n, extra)| (mono(m), &quantum_integer(n) + &TPoly::constant(extra)))
        .collect()
}


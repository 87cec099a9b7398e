//! Weighted graphs read off a Gram matrix.

use serde::{Deserialize, Serialize};

use crate::exact::{BasisLabel, BilinearSpace, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub label: String,
    pub self_intersection: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub weight: Rational,
}

/// Coxeter-Dynkin diagram: one vertex per basis vector, one edge per
/// nonzero off-diagonal Gram entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl DynkinGraph {
    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn degree(&self, id: &str) -> usize {
        self.edges
            .iter()
            .filter(|e| e.source == id || e.target == id)
            .count()
    }
}

/// Vertices follow basis order; edges follow `(row, col)` order with
/// `row < col`.
pub fn to_graph(space: &BilinearSpace, drop: &[BasisLabel]) -> DynkinGraph {
    let kept = space.without(drop);
    let basis = kept.basis();
    let gram = kept.gram();
    let vertices = basis
        .iter()
        .enumerate()
        .map(|(i, l)| Vertex {
            id: l.id(),
            label: l.to_string(),
            self_intersection: gram[(i, i)].clone(),
        })
        .collect();
    let mut edges = Vec::new();
    for r in 0..basis.len() {
        for c in r + 1..basis.len() {
            if !gram[(r, c)].is_zero() {
                edges.push(Edge {
                    source: basis[r].id(),
                    target: basis[c].id(),
                    weight: gram[(r, c)].clone(),
                });
            }
        }
    }
    DynkinGraph { vertices, edges }
}

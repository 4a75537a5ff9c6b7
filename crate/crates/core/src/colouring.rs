//! Edge colourings.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{param, Result};
use crate::graph::Graph;

/// An assignment of a colour in `0..r` to each edge of a graph, indexed by
/// the graph's canonical edge order ([`Graph::edges`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Colouring {
    r: usize,
    assignment: Vec<usize>,
}

impl Colouring {
    pub fn new(r: usize, assignment: Vec<usize>) -> Result<Self> {
        if let Some(&c) = assignment.iter().find(|&&c| c >= r) {
            return Err(param(format!("colour {c} not below r={r}")));
        }
        Ok(Colouring { r, assignment })
    }

    /// Every edge gets colour 0.
    pub fn monochromatic(r: usize, edge_count: usize) -> Self {
        assert!(r >= 1);
        Colouring {
            r,
            assignment: alloc::vec![0; edge_count],
        }
    }

    /// Builds a colouring of `g` from a function of each edge.
    pub fn from_fn(
        g: &Graph,
        r: usize,
        mut colour: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let assignment = g.edges().into_iter().map(|(u, v)| colour(u, v)).collect();
        Self::new(r, assignment)
    }

    #[inline]
    pub fn colours(&self) -> usize {
        self.r
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    #[inline]
    pub fn colour_of(&self, edge: usize) -> usize {
        self.assignment[edge]
    }

    /// Checks that the colouring has exactly one colour per edge of `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.edge_count() {
            return Err(param(format!(
                "colouring has {} entries but graph has {} edges",
                self.assignment.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }

    /// The spanning subgraph formed by edges of colour `colour`.
    pub fn class(&self, g: &Graph, colour: usize) -> Result<Graph> {
        self.check(g)?;
        if colour >= self.r {
            return Err(param(format!("colour {colour} not below r={}", self.r)));
        }
        Ok(g.spanning_subgraph(|i| self.assignment[i] == colour))
    }

    /// Applies a permutation of colour labels: colour `c` becomes `perm[c]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = alloc::vec![false; self.r];
        if perm.len() != self.r
            || perm
                .iter()
                .any(|&c| c >= self.r || core::mem::replace(&mut seen[c], true))
        {
            return Err(param("not a permutation of the colours"));
        }
        Ok(Colouring {
            r: self.r,
            assignment: self.assignment.iter().map(|&c| perm[c]).collect(),
        })
    }

    /// Splits colour `colour` into itself and a new colour `r`, moving the
    /// edges selected by `move_edge` (edge indices) into the new colour.
    pub fn refine(&self, colour: usize, mut move_edge: impl FnMut(usize) -> bool) -> Self {
        let r = self.r + 1;
        let assignment = self
            .assignment
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if c == colour && move_edge(i) {
                    self.r
                } else {
                    c
                }
            })
            .collect();
        Colouring { r, assignment }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_partition_edges() {
        let g = Graph::complete(4);
        let col = Colouring::from_fn(&g, 3, |u, v| (u + v) % 3).unwrap();
        let total: usize = (0..3).map(|c| col.class(&g, c).unwrap().edge_count()).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn out_of_range_colour() {
        assert!(Colouring::new(2, alloc::vec![0, 2]).is_err());
    }

    #[test]
    fn permutation_validation() {
        let col = Colouring::new(3, alloc::vec![0, 1, 2]).unwrap();
        assert_eq!(col.permuted(&[2, 0, 1]).unwrap().assignment(), &[2, 0, 1]);
        assert!(col.permuted(&[0, 0, 1]).is_err());
    }
}

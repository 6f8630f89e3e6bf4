//! Edge colourings: total maps from a graph's edge set to colour classes.

use crate::graph::{Edge, Graph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("colouring has {got} entries but the graph has {expected} edges")]
    DomainMismatch { expected: usize, got: usize },
    #[error("colour {colour} out of range for {r} classes")]
    ColourOutOfRange { colour: u8, r: usize },
    #[error("need at least one colour class")]
    NoClasses,
}

/// One of the two colours of the r = 2 theory.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Color::Red => 0,
            Color::Blue => 1,
        }
    }

    pub fn from_index(i: u8) -> Color {
        match i {
            0 => Color::Red,
            1 => Color::Blue,
            _ => panic!("two-colour index {i}"),
        }
    }
}

/// Total map from the edges of one graph (in its sorted edge order) to
/// colour indices `0..r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    r: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(g: &Graph, r: usize, colors: Vec<u8>) -> Result<EdgeColoring, ColoringError> {
        if r == 0 {
            return Err(ColoringError::NoClasses);
        }
        if colors.len() != g.m() {
            return Err(ColoringError::DomainMismatch {
                expected: g.m(),
                got: colors.len(),
            });
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= r) {
            return Err(ColoringError::ColourOutOfRange { colour: c, r });
        }
        Ok(EdgeColoring { r, colors })
    }

    pub fn monochromatic(g: &Graph, r: usize, colour: u8) -> EdgeColoring {
        EdgeColoring::new(g, r, vec![colour; g.m()]).expect("constant colouring")
    }

    /// Two-colouring from an explicit edge -> colour map; every edge of `g`
    /// must be covered.
    pub fn from_map(
        g: &Graph,
        map: &std::collections::BTreeMap<Edge, Color>,
    ) -> Result<EdgeColoring, ColoringError> {
        if map.len() != g.m() {
            return Err(ColoringError::DomainMismatch {
                expected: g.m(),
                got: map.len(),
            });
        }
        let mut colors = Vec::with_capacity(g.m());
        for e in g.edges() {
            match map.get(e) {
                Some(c) => colors.push(c.index()),
                None => {
                    return Err(ColoringError::DomainMismatch {
                        expected: g.m(),
                        got: map.len(),
                    })
                }
            }
        }
        EdgeColoring::new(g, 2, colors)
    }

    pub fn classes(&self) -> usize {
        self.r
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Colour of the edge with index `i` in the graph's sorted edge order.
    pub fn color_of_index(&self, i: usize) -> u8 {
        self.colors[i]
    }

    pub fn color_of(&self, g: &Graph, e: Edge) -> Option<u8> {
        g.edge_index(e).map(|i| self.colors[i])
    }

    /// Edges of one colour class, in sorted order.
    pub fn class_edges(&self, g: &Graph, colour: u8) -> Vec<Edge> {
        g.edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c == colour)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Checks the colouring is defined on exactly the edges of `g`.
    pub fn check_domain(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.m() {
            return Err(ColoringError::DomainMismatch {
                expected: g.m(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn rejects_bad_domains() {
        let g = cycle(4);
        assert!(matches!(
            EdgeColoring::new(&g, 2, vec![0, 1, 0]),
            Err(ColoringError::DomainMismatch { expected: 4, got: 3 })
        ));
        assert!(matches!(
            EdgeColoring::new(&g, 2, vec![0, 1, 0, 2]),
            Err(ColoringError::ColourOutOfRange { colour: 2, r: 2 })
        ));
    }

    #[test]
    fn class_extraction() {
        let g = cycle(4);
        let c = EdgeColoring::new(&g, 2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(c.class_edges(&g, 0).len(), 2);
        assert_eq!(c.class_edges(&g, 1).len(), 2);
    }
}

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A wall of height `h`: rows `y = 0..=h` of vertices `(x, y)` with
/// `x = 0..=2h+1`, without the bottom-left corner and without one top
/// corner (the right one when `h` is even, the left one when `h` is odd).
/// Rows are paths; `(x, y)` and `(x, y+1)` are joined when `x` and `y`
/// have different parity. Vertices are numbered row by row from the bottom.
///
/// Height 2 has 16 vertices and 19 edges, height 3 has 30 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub height: usize,
    pub graph: Graph,
    /// `(x, y)` of each vertex.
    pub coords: Vec<(usize, usize)>,
}

impl Wall {
    /// Whether edge `uv` joins two rows.
    pub fn is_vertical(&self, u: usize, v: usize) -> bool {
        self.coords[u].1 != self.coords[v].1
    }
}

pub fn wall(height: usize) -> Result<Wall> {
    if height < 2 {
        return Err(Error::Precondition(format!("wall height {height} is below 2")));
    }
    let h = height;
    let present = |x: usize, y: usize| {
        x <= 2 * h + 1 && !(x == 0 && y == 0) && !(y == h && x == if h % 2 == 0 { 2 * h + 1 } else { 0 })
    };
    let mut coords = Vec::new();
    for y in 0..=h {
        for x in 0..=2 * h + 1 {
            if present(x, y) {
                coords.push((x, y));
            }
        }
    }
    let id = |x: usize, y: usize| coords.iter().position(|&c| c == (x, y));
    let mut edges = Vec::new();
    for (v, &(x, y)) in coords.iter().enumerate() {
        if let Some(r) = id(x + 1, y) {
            edges.push((v, r));
        }
        if y < h && x % 2 != y % 2 {
            if let Some(up) = id(x, y + 1) {
                edges.push((v, up));
            }
        }
    }
    let graph = Graph::new(coords.len(), &edges)?;
    Ok(Wall { height, graph, coords })
}

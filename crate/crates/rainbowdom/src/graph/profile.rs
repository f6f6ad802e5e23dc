//! Structural metrics consumed by the bound evaluators.

use super::{Graph, Vertex};

/// Summary invariants: diameter, leaf/penultimate counts, maximum degree,
/// tree test and component count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    /// Hop diameter; `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    pub leaf_count: usize,
    pub penultimate_count: usize,
    pub max_degree: usize,
    pub is_tree: bool,
    pub component_count: usize,
}

pub fn structural_profile(g: &Graph) -> StructuralProfile {
    let component_count = g.component_count();
    let diameter = if component_count == 1 {
        let mut d = 0;
        for v in g.vertices() {
            d = d.max(
                g.bfs_distances(v)
                    .into_iter()
                    .filter(|&x| x != usize::MAX)
                    .max()
                    .unwrap_or(0),
            );
        }
        Some(d)
    } else {
        None
    };
    let leaf_count = g.vertices().filter(|&v| g.is_leaf(v)).count();
    let penultimate_count = g.vertices().filter(|&v| g.is_penultimate(v)).count();
    StructuralProfile {
        diameter,
        leaf_count,
        penultimate_count,
        max_degree: g.max_degree(),
        is_tree: component_count == 1 && g.edge_count() == g.n() - 1,
        component_count,
    }
}

/// Decomposition of a spider: `x` subdivided legs, `y` pendant legs, and the
/// chosen center. For `P_4` both interior vertices qualify and the smaller
/// index is designated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpiderShape {
    pub x: usize,
    pub y: usize,
    pub center: Vertex,
}

/// Returns the spider decomposition of `g`, or `None` if `g` is not a spider
/// (a star `K_{1,t}`, `t >= 2`, with some legs subdivided once).
pub fn classify_spider(g: &Graph) -> Option<SpiderShape> {
    if g.n() < 3 || !g.is_tree() {
        return None;
    }
    'center: for u in g.vertices() {
        if g.degree(u) < 2 {
            continue;
        }
        let mut x = 0;
        let mut y = 0;
        for &w in g.neighbors(u) {
            match g.degree(w) {
                1 => y += 1,
                2 => {
                    // A subdivided leg needs the far endpoint to be a leaf.
                    let &tip = g
                        .neighbors(w)
                        .iter()
                        .find(|&&z| z != u)
                        .expect("degree-2 vertex has a second neighbor");
                    if g.degree(tip) != 1 {
                        continue 'center;
                    }
                    x += 1;
                }
                _ => continue 'center,
            }
        }
        if 2 * x + y + 1 == g.n() {
            return Some(SpiderShape { x, y, center: u });
        }
    }
    None
}

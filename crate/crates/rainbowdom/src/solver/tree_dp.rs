//! Exact γ_r2 on trees by rooted dynamic programming.
//!
//! Per-vertex state: the assigned color set c, plus the set r of colors the
//! vertex still requires from its parent (r is forced empty once c is
//! nonempty). A vertex with c = ∅ must collect {1,2} from its children and
//! parent combined; the root only accepts states with r = ∅. Witnesses are
//! rebuilt from back-pointers.

use super::{Invariant, Method, SolveError, SolveResult, Witness};
use crate::graph::Graph;
use crate::labeling::{ColorSet, RainbowAssignment};

const INF: u32 = u32::MAX / 4;

/// State ids: 0..=3 are (c = ∅, r = id); 4..=6 are (c = id - 3, r = ∅).
const STATES: usize = 7;

fn state_color(s: usize) -> u8 {
    if s < 4 {
        0
    } else {
        (s - 3) as u8
    }
}

struct NodeDp {
    cost: [u32; STATES],
    /// For colored states c in {1,2,3}: the chosen state of each child.
    colored_choice: [Vec<u8>; 3],
    /// For the uncolored states: union-DP trace. Entry `[j][u]` tells which
    /// accumulated union preceded child j and which state child j took to
    /// reach union u afterwards.
    union_trace: Vec<[(u8, u8); 4]>,
}

pub fn tree_rainbow2(t: &Graph) -> Result<SolveResult, SolveError> {
    if !t.is_tree() {
        return Err(SolveError::NotATree);
    }
    let n = t.n();
    let root = 0;

    // BFS order gives parents before children.
    let mut parent = vec![usize::MAX; n];
    let mut bfs = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    bfs.push(root);
    let mut head = 0;
    while head < bfs.len() {
        let u = bfs[head];
        head += 1;
        for &v in t.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                bfs.push(v);
            }
        }
    }
    let children: Vec<Vec<usize>> = {
        let mut ch = vec![Vec::new(); n];
        for &v in &bfs[1..] {
            ch[parent[v]].push(v);
        }
        ch
    };

    let mut dp: Vec<Option<NodeDp>> = (0..n).map(|_| None).collect();
    for &v in bfs.iter().rev() {
        let kids = &children[v];
        let mut node = NodeDp {
            cost: [INF; STATES],
            colored_choice: [
                Vec::with_capacity(kids.len()),
                Vec::with_capacity(kids.len()),
                Vec::with_capacity(kids.len()),
            ],
            union_trace: Vec::with_capacity(kids.len()),
        };

        // Colored states: each child independently picks its best state
        // whose parent requirement is met by c.
        for c in 1u8..=3 {
            let mut total = c.count_ones();
            for &u in kids {
                let table = dp[u].as_ref().expect("children processed first");
                let mut best = INF;
                let mut best_state = 0u8;
                for s in 0..STATES {
                    let feasible = if s < 4 { (s as u8) & !c == 0 } else { true };
                    if feasible && table.cost[s] < best {
                        best = table.cost[s];
                        best_state = s as u8;
                    }
                }
                total = total.saturating_add(best);
                node.colored_choice[(c - 1) as usize].push(best_state);
            }
            node.cost[3 + c as usize] = total;
        }

        // Uncolored states: track the union of child colors; the leftover
        // requirement r is the complement of that union.
        let mut du = [INF; 4];
        du[0] = 0;
        for &u in kids {
            let table = dp[u].as_ref().expect("children processed first");
            // Child under an uncolored parent may not require anything.
            let opt = |c: u8| -> u32 {
                if c == 0 {
                    table.cost[0]
                } else {
                    table.cost[3 + c as usize]
                }
            };
            let mut ndu = [INF; 4];
            let mut trace = [(0u8, 0u8); 4];
            for un in 0..4u8 {
                if du[un as usize] == INF {
                    continue;
                }
                for c in 0..4u8 {
                    let cost = opt(c);
                    if cost == INF {
                        continue;
                    }
                    let next = (un | c) as usize;
                    let cand = du[un as usize].saturating_add(cost);
                    if cand < ndu[next] {
                        ndu[next] = cand;
                        trace[next] = (un, if c == 0 { 0 } else { 3 + c });
                    }
                }
            }
            du = ndu;
            node.union_trace.push(trace);
        }
        for r in 0..4usize {
            node.cost[r] = du[3 ^ r];
        }

        dp[v] = Some(node);
    }

    // The root takes no colors from a parent: states (∅, r=∅) or colored.
    let root_table = dp[root].as_ref().expect("root processed");
    let mut best = INF;
    let mut best_state = 0usize;
    for s in [0, 4, 5, 6] {
        if root_table.cost[s] < best {
            best = root_table.cost[s];
            best_state = s;
        }
    }
    debug_assert!(best < INF, "every tree admits the all-colored assignment");

    // Walk back-pointers top-down.
    let mut colors = vec![ColorSet::EMPTY; n];
    let mut stack = vec![(root, best_state)];
    while let Some((v, s)) = stack.pop() {
        colors[v] = ColorSet::from_bits(state_color(s));
        let node = dp[v].as_ref().expect("all vertices processed");
        let kids = &children[v];
        if s >= 4 {
            let choice = &node.colored_choice[s - 4];
            for (j, &u) in kids.iter().enumerate() {
                stack.push((u, choice[j] as usize));
            }
        } else {
            let mut un = (3 ^ s) as u8;
            for j in (0..kids.len()).rev() {
                let (prev, child_state) = node.union_trace[j][un as usize];
                stack.push((kids[j], child_state as usize));
                un = prev;
            }
        }
    }

    let witness = RainbowAssignment::new(2, colors).expect("states stay within two colors");
    Ok(SolveResult::checked(
        t,
        Invariant::GammaR2,
        best,
        Method::TreeDp,
        Witness::Rainbow(witness),
        n as u64,
    ))
}

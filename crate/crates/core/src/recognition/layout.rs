use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::partitions::LabeledTreeEdge;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A labelled tree on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplicitTree {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId, LabeledTreeEdge)>,
}

impl ExplicitTree {
    pub fn cycle_ids(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|(_, _, l)| l.label.iter().copied()).collect()
    }

    /// Endpoints of the path formed by the edges labelled `c`.
    pub fn path_ends(&self, c: usize) -> Option<(VertexId, VertexId)> {
        let placed: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .filter(|(_, _, l)| l.label.contains(&c))
            .map(|&(u, v, _)| (u, v))
            .collect();
        path_ends(&placed)
    }
}

/// Endpoints if `edges` (taken from a forest) form one simple path.
fn path_ends(edges: &[(VertexId, VertexId)]) -> Option<(VertexId, VertexId)> {
    if edges.is_empty() {
        return None;
    }
    let mut deg: HashMap<VertexId, usize> = HashMap::new();
    for &(u, v) in edges {
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    // acyclic, so connected exactly when |V| = |E| + 1
    if deg.len() != edges.len() + 1 || deg.values().any(|&d| d > 2) {
        return None;
    }
    let mut ends: Vec<VertexId> = deg.iter().filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
    ends.sort_unstable();
    Some((ends[0], ends[1]))
}

struct Search<'a> {
    items: &'a [LabeledTreeEdge],
    members: Vec<Vec<usize>>,
    order: Vec<usize>,
    pos: Vec<Option<(VertexId, VertexId)>>,
    next: VertexId,
}

impl Search<'_> {
    fn placed(&self, c: usize) -> Vec<(VertexId, VertexId)> {
        self.members[c].iter().filter_map(|&i| self.pos[i]).collect()
    }

    fn consistent_after(&self, item: usize) -> bool {
        self.items[item].label.iter().all(|&c| path_ends(&self.placed(c)).is_some())
    }

    fn cycle(&mut self, k: usize) -> bool {
        let Some(&c) = self.order.get(k) else {
            return true;
        };
        let unplaced: Vec<usize> = self.members[c].iter().copied().filter(|&i| self.pos[i].is_none()).collect();
        match path_ends(&self.placed(c)) {
            Some(ends) => self.extend(k, ends, 0, unplaced),
            None => {
                // only the first cycle starts from nothing
                let (&first, rest) = unplaced.split_first().expect("cycle has edges");
                self.pos[first] = Some((self.next, self.next + 1));
                self.next += 2;
                let ends = (self.next - 2, self.next - 1);
                if self.consistent_after(first) && self.extend(k, ends, 0, rest.to_vec()) {
                    return true;
                }
                self.next -= 2;
                self.pos[first] = None;
                false
            }
        }
    }

    /// Hangs the remaining edges of cycle `order[k]` off the path ends, left
    /// chain before right chain so each arrangement is tried once.
    fn extend(&mut self, k: usize, ends: (VertexId, VertexId), side: usize, rest: Vec<usize>) -> bool {
        if rest.is_empty() {
            return self.cycle(k + 1);
        }
        for idx in 0..rest.len() {
            for s in side..2 {
                let item = rest[idx];
                let anchor = if s == 0 { ends.0 } else { ends.1 };
                let fresh = self.next;
                self.pos[item] = Some((anchor, fresh));
                self.next += 1;
                if self.consistent_after(item) {
                    let new_ends = if s == 0 { (fresh, ends.1) } else { (ends.0, fresh) };
                    let mut left = rest.clone();
                    left.remove(idx);
                    if self.extend(k, new_ends, s, left) {
                        return true;
                    }
                }
                self.next -= 1;
                self.pos[item] = None;
            }
        }
        false
    }
}

/// Places the labelled edges as a tree on `n` vertices so that the edges
/// carrying each cycle id form a path, by backtracking over cycles in
/// breadth-first order of label overlap.
pub fn layout_tree(items: &[LabeledTreeEdge], n: usize) -> Result<ExplicitTree> {
    if items.len() + 1 != n {
        return Err(Error::not_a_stag(format!("{} tree edges cannot span {n} vertices", items.len())));
    }
    if items.is_empty() {
        return Ok(ExplicitTree { n, edges: Vec::new() });
    }
    if items.iter().any(|i| i.label.is_empty()) {
        return Err(Error::not_a_stag("a tree edge lies on no cycle"));
    }
    let cycles = items.iter().flat_map(|i| i.label.iter().copied()).max().unwrap() + 1;
    let mut members = vec![Vec::new(); cycles];
    for (i, item) in items.iter().enumerate() {
        for &c in &item.label {
            members[c].push(i);
        }
    }
    let used: Vec<usize> = (0..cycles).filter(|&c| !members[c].is_empty()).collect();
    let mut order = Vec::new();
    let mut seen = vec![false; cycles];
    seen[used[0]] = true;
    let mut queue = VecDeque::from([used[0]]);
    while let Some(c) = queue.pop_front() {
        order.push(c);
        for &i in &members[c] {
            for &d in &items[i].label {
                if !seen[d] {
                    seen[d] = true;
                    queue.push_back(d);
                }
            }
        }
    }
    if order.len() != used.len() {
        return Err(Error::not_a_stag("cycle labels do not overlap into one block"));
    }
    let mut search = Search {
        items,
        members,
        order,
        pos: vec![None; items.len()],
        next: 0,
    };
    if !search.cycle(0) || search.next != n {
        return Err(Error::not_a_stag("no tree layout makes every cycle label a path"));
    }
    Ok(ExplicitTree {
        n,
        edges: items
            .iter()
            .zip(&search.pos)
            .map(|(item, p)| {
                let (u, v) = p.unwrap();
                (u, v, item.clone())
            })
            .collect(),
    })
}

/// The tree plus one chord per cycle id, joining the ends of its path.
pub fn add_chords(t: &ExplicitTree) -> Result<Graph> {
    let mut g = Graph::new(t.n);
    for &(u, v, _) in &t.edges {
        g.add_edge(u, v)
            .map_err(|_| Error::not_a_stag("tree edges are not simple"))?;
    }
    for c in t.cycle_ids() {
        let (a, b) = t
            .path_ends(c)
            .ok_or_else(|| Error::not_a_stag(format!("cycle {c} is not a path in the tree")))?;
        g.add_edge(a, b)
            .map_err(|_| Error::not_a_stag(format!("chord for cycle {c} duplicates an edge")))?;
    }
    Ok(g)
}

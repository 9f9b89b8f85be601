//! "Does `t` contain any stored set?" queries over a family of coalitions.
//!
//! Sets are stored in a trie keyed by their players in ascending order. A
//! query only descends into children whose player is in `t`, so its cost
//! is bounded by the stored prefixes that fit inside `t` rather than by the
//! size of the family.

use crate::coalition::Coalition;

#[derive(Default)]
struct Node {
    terminal: bool,
    children: Vec<(u8, u32)>,
}

pub(crate) struct SubsetIndex {
    nodes: Vec<Node>,
}

impl SubsetIndex {
    pub(crate) fn new<'a, I: IntoIterator<Item = &'a Coalition>>(sets: I) -> Self {
        let mut nodes = vec![Node::default()];
        for s in sets {
            let mut at = 0usize;
            for p in s.players() {
                let bit = p.bit() as u8;
                at = match nodes[at].children.iter().find(|c| c.0 == bit) {
                    Some(&(_, next)) => next as usize,
                    None => {
                        let next = nodes.len();
                        nodes.push(Node::default());
                        nodes[at].children.push((bit, next as u32));
                        next
                    }
                };
            }
            nodes[at].terminal = true;
        }
        SubsetIndex { nodes }
    }

    /// True if some stored set is a subset of `t`.
    pub(crate) fn any_subset_of(&self, t: Coalition) -> bool {
        let bits = t.bits();
        let mut stack = vec![0u32];
        while let Some(at) = stack.pop() {
            let node = &self.nodes[at as usize];
            if node.terminal {
                return true;
            }
            stack.extend(
                node.children
                    .iter()
                    .filter(|&&(b, _)| bits >> b & 1 == 1)
                    .map(|&(_, next)| next),
            );
        }
        false
    }
}

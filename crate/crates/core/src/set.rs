//! Isomorphism-deduplicated graph collections.

use std::collections::BTreeMap;

use crate::canon::canonical_key;
use crate::graph::Graph;

/// A set of graphs with at most one member per isomorphism class.
/// Iteration order is deterministic: ascending canonical key, which sorts
/// by vertex count first.
#[derive(Debug, Clone, Default)]
pub struct GraphSet {
    members: Vec<Graph>,
    index: BTreeMap<Vec<u8>, usize>,
}

impl GraphSet {
    pub fn new() -> GraphSet {
        GraphSet::default()
    }

    /// Inserts `g` unless an isomorphic member is already present.
    /// Returns true when the set grew.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = canonical_key(&g);
        if self.index.contains_key(&key) {
            return false;
        }
        self.members.push(g);
        self.index.insert(key, self.members.len() - 1);
        true
    }

    pub fn contains_iso(&self, g: &Graph) -> bool {
        self.index.contains_key(&canonical_key(g))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical-key order.
    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.index.values().map(|&i| &self.members[i])
    }

    pub fn union(&self, other: &GraphSet) -> GraphSet {
        let mut out = self.clone();
        for g in other.iter() {
            out.insert(*g);
        }
        out
    }

    pub fn keys(&self) -> impl Iterator<Item = &[u8]> {
        self.index.keys().map(|k| k.as_slice())
    }

    /// Set equality as isomorphism classes.
    pub fn same_classes(&self, other: &GraphSet) -> bool {
        self.index.len() == other.index.len()
            && self.index.keys().zip(other.index.keys()).all(|(a, b)| a == b)
    }
}

impl FromIterator<Graph> for GraphSet {
    fn from_iter<T: IntoIterator<Item = Graph>>(iter: T) -> GraphSet {
        let mut s = GraphSet::new();
        for g in iter {
            s.insert(g);
        }
        s
    }
}

impl<'a> IntoIterator for &'a GraphSet {
    type Item = &'a Graph;
    type IntoIter = Box<dyn Iterator<Item = &'a Graph> + 'a>;
    fn into_iter(self) -> Self::IntoIter {
        Box::new(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dedups_isomorphic_members() {
        let mut s = GraphSet::new();
        assert!(s.insert(catalog::wheel(3)));
        assert!(!s.insert(catalog::complete(4)));
        assert!(s.insert(catalog::cycle(4)));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn iteration_is_sorted_by_key() {
        let mut s = GraphSet::new();
        s.insert(catalog::petersen());
        s.insert(catalog::complete(3));
        s.insert(catalog::cycle(5));
        let ns: Vec<usize> = s.iter().map(|g| g.n()).collect();
        assert_eq!(ns, vec![3, 5, 10]);
    }
}

//! The Catalan family tree, grown by its sibling-naming rules.
//!
//! A member with seniority `s` (0 for the oldest sibling) has `s + 2`
//! children. Its children are named, oldest first, after its own sibship
//! (itself and its older siblings, oldest first), followed by the
//! generation number of the children for the youngest.

use crate::sequence::{Sequence, Term, Terms};

/// A member of the family together with the naming state of its sibship.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyNode {
    full_name: Sequence,
    sibship: Vec<Term>,
}

impl FamilyNode {
    pub fn full_name(&self) -> &Sequence {
        &self.full_name
    }

    /// Names of this node and its older siblings, oldest first.
    pub fn sibship_prefix(&self) -> &[Term] {
        &self.sibship
    }

    pub fn name(&self) -> Term {
        self.full_name.last()
    }

    pub fn generation(&self) -> usize {
        self.full_name.generation()
    }

    /// 0 for the oldest sibling.
    pub fn seniority(&self) -> usize {
        self.sibship.len() - 1
    }

    pub fn child_count(&self) -> usize {
        self.seniority() + 2
    }

    pub fn into_full_name(self) -> Sequence {
        self.full_name
    }

    /// The names this node gives its children, oldest first.
    pub fn child_names(&self) -> Vec<Term> {
        let mut names = Vec::with_capacity(self.sibship.len() + 1);
        names.extend_from_slice(&self.sibship);
        names.push((self.generation() + 1) as Term);
        names
    }

    pub fn children(&self) -> Vec<FamilyNode> {
        let names = self.child_names();
        (0..names.len())
            .map(|i| {
                let mut terms = Vec::with_capacity(self.full_name.len() + 1);
                terms.extend_from_slice(self.full_name.terms());
                terms.push(names[i]);
                FamilyNode {
                    full_name: Sequence::from_terms_unchecked(terms),
                    sibship: names[..=i].to_vec(),
                }
            })
            .collect()
    }
}

pub fn family_root() -> FamilyNode {
    FamilyNode {
        full_name: Sequence::root(),
        sibship: vec![0],
    }
}

pub fn children(node: &FamilyNode) -> Vec<FamilyNode> {
    node.children()
}

/// Members of one generation in breadth-first order, oldest sibling first.
///
/// Restricted to a single level, breadth-first order coincides with
/// depth-first preorder, so a DFS stack yields the level lazily in
/// `O(n^2)` memory.
#[derive(Debug, Clone)]
pub struct FamilyGeneration {
    target: usize,
    stack: Vec<FamilyNode>,
}

impl Iterator for FamilyGeneration {
    type Item = FamilyNode;

    fn next(&mut self) -> Option<FamilyNode> {
        while let Some(node) = self.stack.pop() {
            if node.generation() == self.target {
                return Some(node);
            }
            let mut kids = node.children();
            kids.reverse();
            self.stack.extend(kids);
        }
        None
    }
}

pub fn enumerate_family(n: usize) -> FamilyGeneration {
    FamilyGeneration {
        target: n,
        stack: vec![family_root()],
    }
}

/// Plain breadth-first expansion that materializes each level; the
/// reference for [`enumerate_family`]'s ordering.
pub fn family_generation_bfs(n: usize) -> Vec<FamilyNode> {
    let mut level = vec![family_root()];
    for _ in 0..n {
        level = level.iter().flat_map(FamilyNode::children).collect();
    }
    level
}

/// Walks `s` from the root, following the naming rules at every step.
///
/// Independent of δ: only the child-naming rule is consulted.
pub fn is_family_member<T: Terms + ?Sized>(s: &T) -> bool {
    family_path(s.terms()).is_some()
}

/// Seniority of each prefix of `terms` along its path in the family tree,
/// or `None` if some prefix is not a member.
pub fn family_path(terms: &[Term]) -> Option<Vec<usize>> {
    if terms.first() != Some(&0) {
        return None;
    }
    let mut sibship: Vec<Term> = vec![0];
    let mut seniorities = Vec::with_capacity(terms.len());
    seniorities.push(0);
    for (generation, &name) in terms.iter().enumerate().skip(1) {
        // child names are sibship ++ [generation], strictly increasing
        let position = if name as usize == generation {
            sibship.len()
        } else {
            sibship.binary_search(&name).ok()?
        };
        sibship.truncate(position);
        sibship.push(name);
        seniorities.push(position);
    }
    Some(seniorities)
}

/// Count of generation-`n` members by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NameDistribution {
    pub generation: usize,
    /// `counts[r]` = members whose last term is `r`.
    pub counts: Vec<u64>,
}

impl NameDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Members named 0.
    pub fn oldest(&self) -> u64 {
        self.counts[0]
    }
}

pub fn name_distribution(n: usize) -> NameDistribution {
    let mut counts = vec![0u64; n + 1];
    for node in enumerate_family(n) {
        counts[node.name() as usize] += 1;
    }
    NameDistribution { generation: n, counts }
}

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::{Elem, ElementSet, Group};
use crate::error::{GroupError, Result};

/// A subgroup of one particular [`Group`], stored as a membership bitset.
///
/// Equality, hashing and ordering use the member set only (ordering is by
/// order first, then the bitset), never the generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: u64,
    members: ElementSet,
    order: usize,
    generators: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl Subgroup {
    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e.index())
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(Elem::new)
    }

    /// A generating set; empty for the trivial subgroup.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.members.is_subset(&other.members)
    }
}

impl Group {
    pub(crate) fn make_subgroup(&self, members: ElementSet, generators: Vec<Elem>) -> Subgroup {
        let order = members.count_ones(..);
        Subgroup {
            parent: self.id(),
            members,
            order,
            generators,
        }
    }

    pub(crate) fn owns(&self, h: &Subgroup) -> Result<()> {
        if h.parent == self.id() {
            Ok(())
        } else {
            Err(GroupError::ForeignSubgroup)
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut s = self.empty_set();
        s.insert(0);
        self.make_subgroup(s, Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        self.make_subgroup(self.all_elements_set(), self.generators().to_vec())
    }

    /// Smallest subgroup containing `elements`.
    pub fn generate(&self, elements: &[Elem]) -> Result<Subgroup> {
        for &e in elements {
            self.check_elem(e)?;
        }
        let mut members = self.empty_set();
        members.insert(0);
        let mut gens = Vec::new();
        for &e in elements {
            self.extend_closed(&mut members, &mut gens, e);
        }
        Ok(self.make_subgroup(members, gens))
    }

    /// `⟨h, extra⟩`.
    pub fn extend(&self, h: &Subgroup, extra: &[Elem]) -> Result<Subgroup> {
        self.owns(h)?;
        for &e in extra {
            self.check_elem(e)?;
        }
        let mut members = h.members.clone();
        let mut gens = h.generators.clone();
        for &e in extra {
            self.extend_closed(&mut members, &mut gens, e);
        }
        Ok(self.make_subgroup(members, gens))
    }

    /// `⟨h, k⟩`.
    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.owns(k)?;
        if k.order > h.order {
            self.extend(k, &h.generators)
        } else {
            self.extend(h, &k.generators)
        }
    }

    pub fn intersection(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.owns(h)?;
        self.owns(k)?;
        let mut members = h.members.clone();
        members.intersect_with(&k.members);
        Ok(self.subgroup_from_closed_set(members))
    }

    /// Wraps a set already known to be a subgroup (e.g. an intersection).
    pub(crate) fn subgroup_from_closed_set(&self, members: ElementSet) -> Subgroup {
        let gens = self.greedy_generators(&members);
        self.make_subgroup(members, gens)
    }

    /// Checks that `members` is closed under multiplication and returns it as a subgroup.
    pub fn subgroup_from_set(&self, members: ElementSet) -> Result<Subgroup> {
        if members.len() != self.order() {
            return Err(GroupError::ForeignSubgroup);
        }
        if !members.contains(0) {
            return Err(GroupError::Validation("set lacks the identity".into()));
        }
        let elems: Vec<Elem> = members.ones().map(Elem::new).collect();
        for &a in &elems {
            for &b in &elems {
                if !members.contains(self.mul(a, b).index()) {
                    return Err(GroupError::Validation("set is not closed".into()));
                }
            }
        }
        Ok(self.subgroup_from_closed_set(members))
    }

    pub fn subgroup_from_elements(&self, elements: &[Elem]) -> Result<Subgroup> {
        let mut set = self.empty_set();
        for &e in elements {
            self.check_elem(e)?;
            set.insert(e.index());
        }
        self.subgroup_from_set(set)
    }

    /// `h^g = g⁻¹ h g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elem) -> Subgroup {
        let mut members = self.empty_set();
        for x in h.elements() {
            members.insert(self.conjugate(x, g).index());
        }
        let gens = h.generators.iter().map(|&x| self.conjugate(x, g)).collect();
        self.make_subgroup(members, gens)
    }
}

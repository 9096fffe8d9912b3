use std::sync::Arc;

use super::{Backend, Elem, Group, Subgroup};
use crate::error::{GroupError, Result};

/// A subgroup re-materialized as a standalone table group, with the maps
/// between its elements and the parent's.
#[derive(Debug)]
pub struct Induced {
    pub group: Group,
    parent_id: u64,
    embedding: Vec<Elem>,
    position: Vec<u32>,
}

impl Induced {
    pub fn lift_elem(&self, e: Elem) -> Elem {
        self.embedding[e.index()]
    }

    pub fn restrict_elem(&self, e: Elem) -> Option<Elem> {
        match self.position.get(e.index()) {
            Some(&p) if p != u32::MAX => Some(Elem(p)),
            _ => None,
        }
    }

    /// Maps a subgroup of the induced group into the parent.
    pub fn lift(&self, parent: &Group, k: &Subgroup) -> Result<Subgroup> {
        self.group.owns(k)?;
        if parent.id() != self.parent_id {
            return Err(GroupError::ForeignSubgroup);
        }
        let mut members = parent.empty_set();
        for x in k.elements() {
            members.insert(self.lift_elem(x).index());
        }
        let gens = k.generators().iter().map(|&x| self.lift_elem(x)).collect();
        Ok(parent.make_subgroup(members, gens))
    }

    /// Maps a parent subgroup contained in the induced subgroup into the induced group.
    pub fn restrict(&self, k: &Subgroup) -> Result<Subgroup> {
        if k.parent_id() != self.parent_id {
            return Err(GroupError::ForeignSubgroup);
        }
        let mut members = self.group.empty_set();
        for x in k.elements() {
            let y = self.restrict_elem(x).ok_or(GroupError::ForeignSubgroup)?;
            members.insert(y.index());
        }
        let gens = k
            .generators()
            .iter()
            .map(|&x| self.restrict_elem(x).ok_or(GroupError::ForeignSubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.group.make_subgroup(members, gens))
    }
}

impl Group {
    /// `h` as a group in its own right. Memoized per member set.
    pub fn induced(&self, h: &Subgroup) -> Result<Arc<Induced>> {
        self.owns(h)?;
        if let Some(found) = self
            .cache()
            .induced
            .lock()
            .expect("induced cache poisoned")
            .get(h.members())
        {
            return Ok(found.clone());
        }
        let embedding: Vec<Elem> = h.elements().collect();
        let mut position = vec![u32::MAX; self.order()];
        for (i, e) in embedding.iter().enumerate() {
            position[e.index()] = i as u32;
        }
        let m = embedding.len();
        let mut table = vec![0u32; m * m];
        for (i, &x) in embedding.iter().enumerate() {
            for (j, &y) in embedding.iter().enumerate() {
                table[i * m + j] = position[self.mul(x, y).index()];
            }
        }
        let generators: Vec<Elem> = h
            .generators()
            .iter()
            .map(|g| Elem(position[g.index()]))
            .collect();
        let names = (1..=generators.len()).map(|i| format!("x{i}")).collect();
        let group = Group::assemble(m, table, generators, names, Backend::Table, self.limits());
        let induced = Arc::new(Induced {
            group,
            parent_id: self.id(),
            embedding,
            position,
        });
        // a concurrent caller may have won the race; keep its copy so that
        // subgroups of the induced group stay interchangeable
        Ok(self
            .cache()
            .induced
            .lock()
            .expect("induced cache poisoned")
            .entry(h.members().clone())
            .or_insert(induced)
            .clone())
    }
}

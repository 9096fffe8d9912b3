use super::{Backend, Elem, Group, Subgroup};
use crate::error::{GroupError, Result};

/// `G/N` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    parent: Group,
    normal: Subgroup,
    projection: Vec<Elem>,
    representatives: Vec<Elem>,
}

impl Quotient {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.normal
    }

    pub fn project(&self, g: Elem) -> Elem {
        self.projection[g.index()]
    }

    /// Least parent element of the coset `q`.
    pub fn representative(&self, q: Elem) -> Elem {
        self.representatives[q.index()]
    }

    /// `HN/N`.
    pub fn image(&self, h: &Subgroup) -> Result<Subgroup> {
        self.parent.owns(h)?;
        let mut members = self.group.empty_set();
        for x in h.elements() {
            members.insert(self.project(x).index());
        }
        let mut gens: Vec<Elem> = h.generators().iter().map(|&x| self.project(x)).collect();
        gens.retain(|e| *e != Elem::IDENTITY);
        gens.dedup();
        Ok(self.group.make_subgroup(members, gens))
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, k: &Subgroup) -> Result<Subgroup> {
        self.group.owns(k)?;
        let mut members = self.parent.empty_set();
        for g in self.parent.elements() {
            if k.contains(self.project(g)) {
                members.insert(g.index());
            }
        }
        let mut gens: Vec<Elem> = k.generators().iter().map(|&q| self.representative(q)).collect();
        gens.extend_from_slice(self.normal.generators());
        let mut closed = self.parent.empty_set();
        closed.insert(0);
        let mut used = Vec::new();
        for g in gens {
            self.parent.extend_closed(&mut closed, &mut used, g);
        }
        debug_assert_eq!(closed, members);
        Ok(self.parent.make_subgroup(members, used))
    }
}

impl Group {
    /// Quotient by a normal subgroup. Cosets are ordered by their least element.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient> {
        self.owns(normal)?;
        if !self.is_normal(normal)? {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut projection = vec![Elem(u32::MAX); n];
        let mut representatives = Vec::with_capacity(n / normal.order());
        let kernel: Vec<Elem> = normal.elements().collect();
        for g in self.elements() {
            if projection[g.index()].0 != u32::MAX {
                continue;
            }
            let q = Elem::new(representatives.len());
            representatives.push(g);
            for &k in &kernel {
                projection[self.mul(k, g).index()] = q;
            }
        }
        let m = representatives.len();
        let mut table = vec![0u32; m * m];
        for (i, &ri) in representatives.iter().enumerate() {
            for (j, &rj) in representatives.iter().enumerate() {
                table[i * m + j] = projection[self.mul(ri, rj).index()].0;
            }
        }
        let generators: Vec<Elem> = self.generators().iter().map(|&g| projection[g.index()]).collect();
        let group = Group::assemble(
            m,
            table,
            generators,
            self.generator_names().to_vec(),
            Backend::Quotient {
                parent: self.clone(),
                normal: normal.clone(),
                representatives: representatives.clone(),
            },
            self.limits(),
        );
        Ok(Quotient {
            group,
            parent: self.clone(),
            normal: normal.clone(),
            projection,
            representatives,
        })
    }

    /// Parent and kernel when this group was built as a quotient.
    pub fn quotient_source(&self) -> Option<(&Group, &Subgroup)> {
        match &self.inner().backend {
            Backend::Quotient { parent, normal, .. } => Some((parent, normal)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;
    use super::*;

    #[test]
    fn quotient_by_trivial_is_bijective() {
        let g = s3();
        let q = g.quotient(&g.trivial_subgroup()).unwrap();
        assert_eq!(q.group.order(), 6);
        let mut images: Vec<_> = g.elements().map(|x| q.project(x)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn s3_mod_c3_has_order_two_and_projection_is_homomorphism() {
        let g = s3();
        let c3 = g
            .generate(&[g.elements().find(|&e| g.element_order(e).unwrap() == 3).unwrap()])
            .unwrap();
        let q = g.quotient(&c3).unwrap();
        assert_eq!(q.group.order(), 2);
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(q.project(g.mul(x, y)), q.group.mul(q.project(x), q.project(y)));
            }
        }
        assert_eq!(q.preimage(&q.group.trivial_subgroup()).unwrap(), c3);
    }

    #[test]
    fn non_normal_kernel_is_rejected() {
        let g = s3();
        let t = g.elements().find(|&e| g.element_order(e).unwrap() == 2).unwrap();
        let h = g.generate(&[t]).unwrap();
        assert_eq!(g.quotient(&h).unwrap_err(), GroupError::NotNormal);
    }
}

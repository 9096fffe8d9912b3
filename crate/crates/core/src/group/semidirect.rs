use std::collections::{HashSet, VecDeque};

use super::{Backend, Elem, Group, Subgroup};
use crate::error::{GroupError, Result};

/// How an acting group `H` operates on a normal factor `A`.
///
/// `images[j][i]` is `a_i^{h_j}`: the image of the `i`-th generator of `A`
/// under the `j`-th generator of `H`, as an element of `A`. Actions are right
/// actions, `a^{xy} = (a^x)^y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    images: Vec<Vec<Elem>>,
}

impl ActionSpec {
    pub fn new(images: Vec<Vec<Elem>>) -> Self {
        ActionSpec { images }
    }

    /// Every generator of `acting` fixes `normal` pointwise.
    pub fn trivial(normal: &Group, acting: &Group) -> Self {
        ActionSpec {
            images: vec![normal.generators().to_vec(); acting.generators().len()],
        }
    }

    /// Builds the spec from full automorphism tables, one per acting generator.
    pub fn from_automorphisms(normal: &Group, automorphisms: &[Vec<u32>]) -> Self {
        let images = automorphisms
            .iter()
            .map(|aut| {
                normal
                    .generators()
                    .iter()
                    .map(|g| Elem(aut[g.index()]))
                    .collect()
            })
            .collect();
        ActionSpec { images }
    }

    pub fn images(&self) -> &[Vec<Elem>] {
        &self.images
    }

    /// Validates the spec and returns, for every element `h` of `acting`, the
    /// automorphism `a ↦ a^h` as an index table over `normal`.
    pub fn automorphism_tables(&self, normal: &Group, acting: &Group) -> Result<Vec<Vec<u32>>> {
        if self.images.len() != acting.generators().len() {
            return Err(GroupError::InvalidAction(format!(
                "{} image lists for {} acting generators",
                self.images.len(),
                acting.generators().len()
            )));
        }
        let mut per_generator = Vec::with_capacity(self.images.len());
        for (j, imgs) in self.images.iter().enumerate() {
            let aut = extend_to_automorphism(normal, imgs).ok_or_else(|| {
                GroupError::InvalidAction(format!(
                    "images under acting generator {} do not define an automorphism",
                    acting.generator_names().get(j).map_or("?", |s| s.as_str())
                ))
            })?;
            per_generator.push(aut);
        }
        let n = normal.order();
        let identity: Vec<u32> = (0..n as u32).collect();
        let mut tables: Vec<Option<Vec<u32>>> = vec![None; acting.order()];
        tables[0] = Some(identity);
        let mut queue = VecDeque::from([Elem::IDENTITY]);
        while let Some(h) = queue.pop_front() {
            for (j, &g) in acting.generators().iter().enumerate() {
                let hg = acting.mul(h, g);
                let base = tables[h.index()].as_ref().expect("visited");
                let alpha = &per_generator[j];
                let candidate: Vec<u32> = base.iter().map(|&a| alpha[a as usize]).collect();
                match &tables[hg.index()] {
                    None => {
                        tables[hg.index()] = Some(candidate);
                        queue.push_back(hg);
                    }
                    Some(existing) if *existing != candidate => {
                        return Err(GroupError::InvalidAction(
                            "action does not respect the relations of the acting group".into(),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(tables.into_iter().map(|t| t.expect("acting group is generated")).collect())
    }
}

/// Extends generator images to an endomorphism of `group`, returning the
/// image table, or `None` if the assignment is not a homomorphism.
pub fn extend_to_endomorphism(group: &Group, images: &[Elem]) -> Option<Vec<u32>> {
    if images.len() != group.generators().len() || images.iter().any(|e| !group.contains(*e)) {
        return None;
    }
    let mut map: Vec<Option<u32>> = vec![None; group.order()];
    map[0] = Some(0);
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        let fx = Elem(map[x.index()].expect("visited"));
        for (k, &g) in group.generators().iter().enumerate() {
            let y = group.mul(x, g);
            let fy = group.mul(fx, images[k]).0;
            match map[y.index()] {
                None => {
                    map[y.index()] = Some(fy);
                    queue.push_back(y);
                }
                Some(existing) if existing != fy => return None,
                Some(_) => {}
            }
        }
    }
    map.into_iter().collect()
}

/// As [`extend_to_endomorphism`], additionally requiring bijectivity.
pub fn extend_to_automorphism(group: &Group, images: &[Elem]) -> Option<Vec<u32>> {
    let map = extend_to_endomorphism(group, images)?;
    let distinct: HashSet<u32> = map.iter().copied().collect();
    (distinct.len() == map.len()).then_some(map)
}

/// `A ⋊ H` together with the embedded copies of both factors.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: Group,
    /// Embedded copy of the normal factor.
    pub normal: Subgroup,
    /// Embedded copy of the acting factor.
    pub complement: Subgroup,
}

impl SemidirectProduct {
    pub fn embed_normal(&self, a: Elem) -> Elem {
        let (_, acting) = self.group.semidirect_factors().expect("semidirect backend");
        Elem::new(a.index() * acting.order())
    }

    pub fn embed_acting(&self, h: Elem) -> Elem {
        h
    }
}

impl Group {
    /// Semidirect product `A ⋊_α H` on pairs `(a, h)` with
    /// `(a₁, h₁)(a₂, h₂) = (a₁ · a₂^{h₁⁻¹}, h₁h₂)`.
    ///
    /// Generators are those of `A` followed by those of `H`; an acting-generator
    /// name that clashes with an earlier name gets `_h` appended until unique.
    pub fn semidirect(normal: &Group, acting: &Group, action: &ActionSpec) -> Result<SemidirectProduct> {
        let limits = normal.limits();
        let (na, nh) = (normal.order(), acting.order());
        let n = na * nh;
        if n > limits.enumeration_cap {
            return Err(GroupError::CapExceeded {
                what: "element enumeration",
                cap: limits.enumeration_cap,
            });
        }
        let auts = action.automorphism_tables(normal, acting)?;
        let idx = |a: u32, h: u32| a as usize * nh + h as usize;
        let mut table = vec![0u32; n * n];
        for a1 in 0..na as u32 {
            for h1 in 0..nh as u32 {
                let row = idx(a1, h1) * n;
                let twist = &auts[acting.inv(Elem(h1)).index()];
                for a2 in 0..na as u32 {
                    let a = normal.mul(Elem(a1), Elem(twist[a2 as usize])).0;
                    for h2 in 0..nh as u32 {
                        let h = acting.mul(Elem(h1), Elem(h2)).0;
                        table[row + idx(a2, h2)] = idx(a, h) as u32;
                    }
                }
            }
        }
        let mut generators: Vec<Elem> = normal
            .generators()
            .iter()
            .map(|a| Elem::new(a.index() * nh))
            .collect();
        generators.extend(acting.generators().iter().copied());
        let mut names: Vec<String> = normal.generator_names().to_vec();
        for name in acting.generator_names() {
            let mut fresh = name.clone();
            while names.contains(&fresh) {
                fresh.push_str("_h");
            }
            names.push(fresh);
        }
        let group = Group::assemble(
            n,
            table,
            generators,
            names,
            Backend::Semidirect {
                normal: normal.clone(),
                acting: acting.clone(),
                action: action.clone(),
            },
            limits,
        );
        let normal_gens: Vec<Elem> = group.generators()[..normal.generators().len()].to_vec();
        let acting_gens: Vec<Elem> = group.generators()[normal.generators().len()..].to_vec();
        let mut normal_set = group.empty_set();
        for a in 0..na {
            normal_set.insert(a * nh);
        }
        let mut acting_set = group.empty_set();
        acting_set.insert_range(0..nh);
        let normal_sub = group.make_subgroup(normal_set, normal_gens);
        let complement = group.make_subgroup(acting_set, acting_gens);
        Ok(SemidirectProduct {
            group,
            normal: normal_sub,
            complement,
        })
    }

    /// The factors `(A, H)` when this group was built as a semidirect product.
    pub fn semidirect_factors(&self) -> Option<(&Group, &Group)> {
        match &self.inner().backend {
            Backend::Semidirect { normal, acting, .. } => Some((normal, acting)),
            _ => None,
        }
    }

    pub fn semidirect_action(&self) -> Option<&ActionSpec> {
        match &self.inner().backend {
            Backend::Semidirect { action, .. } => Some(action),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyclic(n: usize) -> Group {
        let cycle: Vec<usize> = (0..n).collect();
        Group::from_permutations(n, vec![Permutation::from_cycles(n, &[cycle]).unwrap()]).unwrap()
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        let a = cyclic(3);
        let h = cyclic(2);
        let sd = Group::direct_product(&a, &h).unwrap();
        assert_eq!(sd.group.order(), 6);
        assert!(sd.group.is_cyclic_of_order(6));
        for x in sd.group.elements() {
            for y in sd.group.elements() {
                assert_eq!(sd.group.mul(x, y), sd.group.mul(y, x));
            }
        }
    }

    #[test]
    fn inversion_action_gives_s3() {
        let a = cyclic(3);
        let h = cyclic(2);
        let g = a.generators()[0];
        let spec = ActionSpec::new(vec![vec![a.inv(g)]]);
        let sd = Group::semidirect(&a, &h, &spec).unwrap();
        let grp = &sd.group;
        assert_eq!(grp.order(), 6);
        assert!(!grp.is_cyclic_of_order(6));
        assert_eq!(sd.normal.order(), 3);
        assert_eq!(sd.complement.order(), 2);
        let meet = grp.intersection(&sd.normal, &sd.complement).unwrap();
        assert!(meet.is_trivial());
        // complement is not normal: some conjugate leaves it
        let b = sd.complement.generators()[0];
        let moved = grp
            .elements()
            .any(|x| !sd.complement.contains(grp.conjugate(b, x)));
        assert!(moved);
        // normal copy is normal
        for x in grp.elements() {
            for n in sd.normal.elements() {
                assert!(sd.normal.contains(grp.conjugate(n, x)));
            }
        }
    }

    #[test]
    fn rejects_non_automorphism() {
        let a = cyclic(3);
        let h = cyclic(2);
        let spec = ActionSpec::new(vec![vec![Elem::IDENTITY]]);
        assert!(matches!(
            Group::semidirect(&a, &h, &spec),
            Err(GroupError::InvalidAction(_))
        ));
    }

    #[test]
    fn rejects_action_violating_acting_relations() {
        // C3 acting on C5 by squaring: the squaring automorphism has order 4, not dividing 3
        let a = cyclic(5);
        let h = cyclic(3);
        let g = a.generators()[0];
        let spec = ActionSpec::new(vec![vec![a.pow(g, 2)]]);
        assert!(matches!(
            Group::semidirect(&a, &h, &spec),
            Err(GroupError::InvalidAction(_))
        ));
    }
}

//! Classification of factorizations `G = AB` and factorization search.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProductFlags {
    /// `AB = G`
    pub is_product: bool,
    pub a_normal: bool,
    /// `A ∩ B = 1`
    pub trivial_intersection: bool,
    /// `B` permutes with every maximal subgroup of every Sylow subgroup of `A`.
    pub b_permutes_sylow_maximals: bool,
    /// Every Sylow subgroup of `B` permutes with every such maximal subgroup.
    pub sylow_wise_permutes: bool,
    pub weak_normal: bool,
    pub weak_direct: bool,
    /// `None` when a factor is too large to enumerate its subgroups.
    pub mutually_permutable: Option<bool>,
    pub theorem_d_hypothesis: bool,
    pub g_prime_nilpotent: bool,
}

/// A pair of subgroups that fail to permute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPermutingPair {
    pub left: Subgroup,
    pub right: Subgroup,
}

#[derive(Clone, Debug)]
pub struct ProductDecomposition {
    pub group: Group,
    pub a: Subgroup,
    pub b: Subgroup,
    pub flags: ProductFlags,
    /// `(M, B)` with `M` maximal in a Sylow subgroup of `A`.
    pub weak_normal_witness: Option<NonPermutingPair>,
    /// `(M, Q)` with `Q` a Sylow subgroup of `B`.
    pub theorem_d_witness: Option<NonPermutingPair>,
    pub mutual_witness: Option<NonPermutingPair>,
    /// True when checking only one Sylow subgroup of `A` per prime would
    /// give a different answer for the maximal-subgroup clause.
    pub sylow_readings_differ: bool,
}

impl Group {
    pub fn classify(&self, a: &Subgroup, b: &Subgroup) -> Result<ProductDecomposition> {
        self.owns(a)?;
        self.owns(b)?;
        let mut flags = ProductFlags {
            is_product: self.product_size(a, b)? == self.order(),
            a_normal: self.is_normal(a)?,
            trivial_intersection: a.members().intersection_count(b.members()) == 1,
            ..ProductFlags::default()
        };

        let sylows_of_a = self.sylow_subgroups_of(a)?;
        let mut maximals: BTreeSet<Subgroup> = BTreeSet::new();
        let mut representative_maximals: BTreeSet<Subgroup> = BTreeSet::new();
        for (_, list) in &sylows_of_a {
            for (i, p_sub) in list.iter().enumerate() {
                for m in self.maximal_subgroups_of_p_group(p_sub)? {
                    if i == 0 {
                        representative_maximals.insert(m.clone());
                    }
                    maximals.insert(m);
                }
            }
        }

        let weak_normal_witness = first_non_permuting(self, &maximals, std::slice::from_ref(b))?;
        flags.b_permutes_sylow_maximals = weak_normal_witness.is_none();
        let representative_ok = representative_maximals
            .iter()
            .map(|m| self.permutes(m, b))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|x| x);
        let sylow_readings_differ = representative_ok != flags.b_permutes_sylow_maximals;

        let sylows_of_b: Vec<Subgroup> = self
            .sylow_subgroups_of(b)?
            .into_iter()
            .flat_map(|(_, list)| list)
            .collect();
        let theorem_d_witness = first_non_permuting(self, &maximals, &sylows_of_b)?;
        flags.sylow_wise_permutes = theorem_d_witness.is_none();

        flags.weak_normal = flags.a_normal && flags.is_product && flags.b_permutes_sylow_maximals;
        flags.weak_direct = flags.weak_normal && flags.trivial_intersection;
        flags.theorem_d_hypothesis = flags.a_normal && flags.is_product && flags.sylow_wise_permutes;

        let derived = self.derived_subgroup();
        flags.g_prime_nilpotent = self.subgroup_is_member(&derived, crate::formations::Formation::Nilpotent)?;

        let (mutual, mutual_witness) = self.mutual_permutability(a, b)?;
        flags.mutually_permutable = mutual;

        Ok(ProductDecomposition {
            group: self.clone(),
            a: a.clone(),
            b: b.clone(),
            flags,
            weak_normal_witness,
            theorem_d_witness,
            mutual_witness,
            sylow_readings_differ,
        })
    }

    /// Every subgroup of `a` permutes with `b` and every subgroup of `b`
    /// permutes with `a`. `None` when either factor exceeds the
    /// subgroup-enumeration bound.
    fn mutual_permutability(&self, a: &Subgroup, b: &Subgroup) -> Result<(Option<bool>, Option<NonPermutingPair>)> {
        let bound = self.limits().subgroup_enumeration_bound;
        if a.order() > bound || b.order() > bound {
            return Ok((None, None));
        }
        for (inner, outer) in [(a, b), (b, a)] {
            let induced = self.induced(inner)?;
            let subgroups = match induced.group.all_subgroups() {
                Ok(list) => list,
                Err(e) if e.is_cap_exceeded() => return Ok((None, None)),
                Err(e) => return Err(e),
            };
            for s in subgroups.iter() {
                let lifted = induced.lift(self, s)?;
                if !self.permutes(&lifted, outer)? {
                    return Ok((
                        Some(false),
                        Some(NonPermutingPair {
                            left: lifted,
                            right: outer.clone(),
                        }),
                    ));
                }
            }
        }
        Ok((Some(true), None))
    }
}

fn first_non_permuting(
    group: &Group,
    lefts: &BTreeSet<Subgroup>,
    rights: &[Subgroup],
) -> Result<Option<NonPermutingPair>> {
    for m in lefts {
        for r in rights {
            if !group.permutes(m, r)? {
                return Ok(Some(NonPermutingPair {
                    left: m.clone(),
                    right: r.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Conditions a factorization must satisfy, beyond `AB = G`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FlagFilter {
    pub a_normal: bool,
    pub weak_normal: bool,
    pub weak_direct: bool,
    pub mutually_permutable: bool,
    pub theorem_d_hypothesis: bool,
    /// Both factors proper and nontrivial.
    pub proper: bool,
}

impl FlagFilter {
    fn requires_normal_a(&self) -> bool {
        self.a_normal || self.weak_normal || self.weak_direct || self.theorem_d_hypothesis
    }

    pub fn accepts(&self, d: &ProductDecomposition) -> bool {
        let f = &d.flags;
        f.is_product
            && (!self.a_normal || f.a_normal)
            && (!self.weak_normal || f.weak_normal)
            && (!self.weak_direct || f.weak_direct)
            && (!self.mutually_permutable || f.mutually_permutable == Some(true))
            && (!self.theorem_d_hypothesis || f.theorem_d_hypothesis)
    }
}

#[derive(Clone, Debug)]
pub enum SubgroupSource {
    /// The full subgroup list (bounded by the subgroup-enumeration bound).
    All,
    Candidates(Vec<Subgroup>),
}

impl Group {
    /// All `(A, B)` from the source with `AB = G` passing `filter`, sorted by
    /// `(|A|, |B|, members)`. When both orderings of a pair qualify only the
    /// one with the smaller first factor is kept.
    pub fn find_factorizations(&self, filter: FlagFilter, source: &SubgroupSource) -> Result<Vec<ProductDecomposition>> {
        let candidates: Vec<Subgroup> = match source {
            SubgroupSource::All => self.all_subgroups()?.to_vec(),
            SubgroupSource::Candidates(list) => {
                for h in list {
                    self.owns(h)?;
                }
                let set: BTreeSet<Subgroup> = list.iter().cloned().collect();
                set.into_iter().collect()
            }
        };
        let usable = |h: &Subgroup| !filter.proper || (!h.is_trivial() && h.order() < self.order());
        let mut lefts = Vec::new();
        for h in candidates.iter().filter(|h| usable(h)) {
            if !filter.requires_normal_a() || self.is_normal(h)? {
                lefts.push(h.clone());
            }
        }
        let rights: Vec<&Subgroup> = candidates.iter().filter(|h| usable(h)).collect();
        let mut pairs = Vec::new();
        for a in &lefts {
            for &b in &rights {
                if self.product_size(a, b)? == self.order() {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        let results: Vec<Result<Option<ProductDecomposition>>> = pairs
            .par_iter()
            .map(|(a, b)| {
                let d = self.classify(a, b)?;
                Ok(filter.accepts(&d).then_some(d))
            })
            .collect();
        let mut found = Vec::new();
        for r in results {
            if let Some(d) = r? {
                found.push(d);
            }
        }
        found.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
        let keys: HashSet<(Subgroup, Subgroup)> = found.iter().map(|d| (d.a.clone(), d.b.clone())).collect();
        found.retain(|d| d.a <= d.b || !keys.contains(&(d.b.clone(), d.a.clone())));
        Ok(found)
    }
}

impl ProductDecomposition {
    /// Fails with `Invariant` if the flags contradict each other.
    pub fn check_consistency(&self) -> Result<()> {
        let f = &self.flags;
        let bad = |what: &str| Err(GroupError::Invariant(format!("inconsistent flags: {what}")));
        if f.weak_direct && !(f.weak_normal && f.trivial_intersection) {
            return bad("weak_direct without weak_normal and A ∩ B = 1");
        }
        if f.weak_direct && self.a.order() * self.b.order() != self.group.order() {
            return bad("weak_direct but |A||B| != |G|");
        }
        if f.theorem_d_hypothesis && !f.weak_normal {
            return bad("Sylow-wise hypothesis without weak_normal");
        }
        if f.mutually_permutable == Some(true) && f.a_normal && f.is_product && !f.weak_normal {
            return bad("mutually permutable with A normal but not weak_normal");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm_group(degree: usize, gens: &[&str]) -> Group {
        Group::from_permutations(
            degree,
            gens.iter()
                .map(|s| Permutation::parse_cycles(degree, s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn s3_is_weak_direct() {
        let g = perm_group(3, &["(1 2)", "(1 2 3)"]);
        let a = g.sylow_subgroup(3).unwrap();
        let b = g.sylow_subgroup(2).unwrap();
        let d = g.classify(&a, &b).unwrap();
        assert!(d.flags.weak_direct && d.flags.theorem_d_hypothesis);
        assert_eq!(d.flags.mutually_permutable, Some(true));
        d.check_consistency().unwrap();
    }

    #[test]
    fn whole_times_trivial() {
        let g = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        let d = g.classify(&g.whole(), &g.trivial_subgroup()).unwrap();
        assert!(d.flags.weak_direct);
    }

    #[test]
    fn a4_fails_maximal_clause() {
        let g = perm_group(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let v4 = g.sylow_subgroup(2).unwrap();
        let c3 = g.sylow_subgroup(3).unwrap();
        let d = g.classify(&v4, &c3).unwrap();
        assert!(d.flags.is_product && d.flags.a_normal && !d.flags.weak_normal);
        let w = d.weak_normal_witness.unwrap();
        assert_eq!((w.left.order(), w.right.order()), (2, 3));
    }

    #[test]
    fn s3_factorizations() {
        let g = perm_group(3, &["(1 2)", "(1 2 3)"]);
        let filter = FlagFilter {
            weak_direct: true,
            proper: true,
            ..FlagFilter::default()
        };
        let found = g.find_factorizations(filter, &SubgroupSource::All).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(|d| d.a.order() == 3 && d.b.order() == 2));
    }

    #[test]
    fn abelian_symmetric_pairs_are_deduplicated() {
        let g = perm_group(5, &["(1 2)", "(3 4 5)"]);
        let filter = FlagFilter {
            proper: true,
            ..FlagFilter::default()
        };
        let found = g.find_factorizations(filter, &SubgroupSource::All).unwrap();
        // the proper factors of C6 are C2 and C3; the two orderings collapse
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].a.order(), found[0].b.order()), (2, 3));
    }
}

//! Subgroup-level computations: commutators, closures, cores, Sylow and
//! Frattini subgroups, lattices, permutability and subnormality.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::arith::{is_power_of, is_prime, p_part, prime_divisors, prime_power_base};
use crate::error::{GroupError, Result};
use crate::group::{Elem, ElementSet, Group, Subgroup};

/// All normal subgroups of a group, ascending by `(order, member set)`.
///
/// Always contains the trivial subgroup and the whole group, and is closed
/// under joins and intersections.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    nodes: Arc<Vec<Subgroup>>,
}

impl NormalLattice {
    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.nodes.binary_search(h).is_ok()
    }

    /// Nontrivial nodes with no nontrivial node strictly below them.
    pub fn minimal_nontrivial(&self) -> Vec<Subgroup> {
        let nontrivial: Vec<&Subgroup> = self.nodes.iter().filter(|n| !n.is_trivial()).collect();
        nontrivial
            .iter()
            .filter(|n| {
                !nontrivial
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .map(|n| (*n).clone())
            .collect()
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::Validation(format!("{p} is not prime")))
    }
}

impl Group {
    /// `G' = [G, G]`.
    pub fn derived_subgroup(&self) -> Subgroup {
        self.cache()
            .derived
            .get_or_init(|| {
                let whole = self.whole();
                self.commutator_subgroup(&whole, &whole)
                    .expect("whole group belongs to itself")
            })
            .clone()
    }

    /// `[H, K] = ⟨[h, k] : h ∈ H, k ∈ K⟩`, computed as the normal closure in
    /// `⟨H, K⟩` of the commutators of generators.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.owns(h)?;
        self.owns(k)?;
        let span = self.join(h, k)?;
        let seeds: Vec<Elem> = h
            .generators()
            .iter()
            .flat_map(|&x| k.generators().iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        let start = self.generate(&seeds)?;
        self.normal_closure_in(&start, &span)
    }

    /// Smallest normal subgroup of `G` containing `elements`.
    pub fn normal_closure(&self, elements: &[Elem]) -> Result<Subgroup> {
        let start = self.generate(elements)?;
        self.normal_closure_in(&start, &self.whole())
    }

    /// Smallest subgroup containing `h` and normalized by `k`.
    pub fn normal_closure_in(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.owns(h)?;
        self.owns(k)?;
        let mut members = h.members().clone();
        let mut gens = h.generators().to_vec();
        let mut i = 0;
        while i < gens.len() {
            let x = gens[i];
            i += 1;
            for &g in k.generators() {
                let y = self.conjugate(x, g);
                if !members.contains(y.index()) {
                    self.extend_closed(&mut members, &mut gens, y);
                }
            }
        }
        Ok(self.make_subgroup(members, gens))
    }

    /// True iff `H^g = H` for every `g ∈ G`; generator conjugation suffices.
    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        self.is_normalized_by(h, &self.whole())
    }

    /// True iff every element of `k` normalizes `h`.
    pub fn is_normalized_by(&self, h: &Subgroup, k: &Subgroup) -> Result<bool> {
        self.owns(h)?;
        self.owns(k)?;
        Ok(h.generators().iter().all(|&x| {
            k.generators()
                .iter()
                .all(|&g| h.contains(self.conjugate(x, g)))
        }))
    }

    /// `N_K(H) = {k ∈ K : H^k = H}`.
    pub fn normalizer_in(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.owns(h)?;
        self.owns(k)?;
        let mut members = self.empty_set();
        for g in k.elements() {
            if h
                .generators()
                .iter()
                .all(|&x| h.contains(self.conjugate(x, g)))
            {
                members.insert(g.index());
            }
        }
        Ok(self.subgroup_from_closed_set(members))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.normalizer_in(h, &self.whole())
    }

    /// `Core_G(H)`: the intersection of all conjugates of `H`.
    pub fn core(&self, h: &Subgroup) -> Result<Subgroup> {
        self.owns(h)?;
        let mut members = h.members().clone();
        let mut seen: HashSet<ElementSet> = HashSet::new();
        for g in self.elements() {
            let conj = self.conjugate_subgroup(h, g);
            if seen.insert(conj.members().clone()) {
                members.intersect_with(conj.members());
            }
        }
        Ok(self.subgroup_from_closed_set(members))
    }

    /// A Sylow `p`-subgroup of the subgroup `k`, by normalizer growth: starting
    /// from the trivial subgroup, repeatedly adjoin the least `p`-element of
    /// the normalizer that lies outside the current `p`-subgroup.
    pub fn sylow_subgroup_in(&self, k: &Subgroup, p: u64) -> Result<Subgroup> {
        self.owns(k)?;
        check_prime(p)?;
        let target = p_part(k.order() as u64, p) as usize;
        let orders = self.element_orders();
        let mut current = self.trivial_subgroup();
        while current.order() < target {
            let norm = self.normalizer_in(&current, k)?;
            let next = norm.elements().find(|&x| {
                !current.contains(x) && is_power_of(orders[x.index()] as u64, p)
            });
            match next {
                Some(x) => current = self.extend(&current, &[x])?,
                None => break,
            }
        }
        if current.order() != target {
            return Err(GroupError::Invariant(format!(
                "Sylow {p}-subgroup search stopped at order {} instead of {target}",
                current.order()
            )));
        }
        Ok(current)
    }

    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        check_prime(p)?;
        if let Some(s) = self.cache().sylow.lock().expect("sylow cache").get(&p) {
            return Ok(s.clone());
        }
        let s = self.sylow_subgroup_in(&self.whole(), p)?;
        self.cache()
            .sylow
            .lock()
            .expect("sylow cache")
            .insert(p, s.clone());
        Ok(s)
    }

    /// All Sylow `p`-subgroups (the conjugacy class of [`Group::sylow_subgroup`]),
    /// ascending. Checks Sylow's counting constraints.
    pub fn all_sylow_subgroups(&self, p: u64) -> Result<Arc<Vec<Subgroup>>> {
        check_prime(p)?;
        if let Some(s) = self.cache().sylow_all.lock().expect("sylow cache").get(&p) {
            return Ok(s.clone());
        }
        let base = self.sylow_subgroup(p)?;
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        for g in self.elements() {
            found.insert(self.conjugate_subgroup(&base, g));
        }
        let count = found.len() as u64;
        if count % p != 1 % p || !(self.order() as u64).is_multiple_of(count) {
            return Err(GroupError::Invariant(format!(
                "{count} Sylow {p}-subgroups violates Sylow's theorem"
            )));
        }
        let list = Arc::new(found.into_iter().collect::<Vec<_>>());
        self.cache()
            .sylow_all
            .lock()
            .expect("sylow cache")
            .insert(p, list.clone());
        Ok(list)
    }

    /// Every Sylow subgroup of the subgroup `k`, for every prime dividing `|k|`.
    pub fn sylow_subgroups_of(&self, k: &Subgroup) -> Result<Vec<(u64, Vec<Subgroup>)>> {
        let induced = self.induced(k)?;
        prime_divisors(k.order() as u64)
            .into_iter()
            .map(|p| {
                let list = induced.group.all_sylow_subgroups(p)?;
                let lifted = list
                    .iter()
                    .map(|s| induced.lift(self, s))
                    .collect::<Result<Vec<_>>>()?;
                Ok((p, lifted))
            })
            .collect()
    }

    /// `Φ(P) = P'·P^p` for a `p`-subgroup `P`.
    pub fn p_group_frattini(&self, p_sub: &Subgroup) -> Result<Subgroup> {
        self.owns(p_sub)?;
        if p_sub.is_trivial() {
            return Ok(p_sub.clone());
        }
        let p = prime_power_base(p_sub.order() as u64)
            .ok_or(GroupError::NotPGroup { order: p_sub.order() })?;
        let derived = self.commutator_subgroup(p_sub, p_sub)?;
        let powers: Vec<Elem> = p_sub.elements().map(|x| self.pow(x, p as i64)).collect();
        self.extend(&derived, &powers)
    }

    /// All maximal subgroups of a `p`-subgroup `P`: preimages of the hyperplanes
    /// of `P/Φ(P)`. There are `(p^d − 1)/(p − 1)` of them where `p^d = |P/Φ(P)|`.
    pub fn maximal_subgroups_of_p_group(&self, p_sub: &Subgroup) -> Result<Vec<Subgroup>> {
        self.owns(p_sub)?;
        if p_sub.is_trivial() {
            return Ok(Vec::new());
        }
        let p = prime_power_base(p_sub.order() as u64)
            .ok_or(GroupError::NotPGroup { order: p_sub.order() })?;
        let frattini = self.p_group_frattini(p_sub)?;
        // basis of P/Φ(P)
        let mut span = frattini.clone();
        let mut basis = Vec::new();
        for x in p_sub.elements() {
            if !span.contains(x) {
                span = self.extend(&span, &[x])?;
                basis.push(x);
            }
        }
        let d = basis.len();
        let element_of = |v: &[u64]| -> Elem {
            v.iter()
                .zip(&basis)
                .fold(Elem::IDENTITY, |acc, (&c, &b)| self.mul(acc, self.pow(b, c as i64)))
        };
        let mut out = Vec::new();
        for functional in normalized_vectors(p, d) {
            let lead = functional.iter().position(|&c| c != 0).expect("nonzero");
            let kernel: Vec<Elem> = (0..d)
                .filter(|&j| j != lead)
                .map(|j| {
                    let mut v = vec![0u64; d];
                    v[j] = 1;
                    v[lead] = (p - functional[j] % p) % p;
                    element_of(&v)
                })
                .collect();
            let m = self.extend(&frattini, &kernel)?;
            if m.order() * p as usize != p_sub.order() {
                return Err(GroupError::Invariant(format!(
                    "hyperplane preimage of order {} in p-group of order {}",
                    m.order(),
                    p_sub.order()
                )));
            }
            out.push(m);
        }
        out.sort();
        Ok(out)
    }

    /// `HK = {hk}` as a set.
    pub fn product_set(&self, h: &Subgroup, k: &Subgroup) -> Result<ElementSet> {
        self.owns(h)?;
        self.owns(k)?;
        let mut set = self.empty_set();
        let ks: Vec<Elem> = k.elements().collect();
        for x in h.elements() {
            for &y in &ks {
                set.insert(self.mul(x, y).index());
            }
        }
        Ok(set)
    }

    /// `|HK| = |H||K|/|H ∩ K|`.
    pub fn product_size(&self, h: &Subgroup, k: &Subgroup) -> Result<usize> {
        self.owns(h)?;
        self.owns(k)?;
        let meet = h.members().intersection_count(k.members());
        Ok(h.order() * k.order() / meet)
    }

    /// True iff `HK = KH`, i.e. `HK` is a subgroup. Decided by comparing
    /// `|⟨H, K⟩|` with `|HK|`.
    pub fn permutes(&self, h: &Subgroup, k: &Subgroup) -> Result<bool> {
        self.owns(h)?;
        self.owns(k)?;
        if h.is_subgroup_of(k) || k.is_subgroup_of(h) {
            return Ok(true);
        }
        let size = self.product_size(h, k)?;
        if size > self.order() || !self.order().is_multiple_of(size) {
            return Ok(false);
        }
        Ok(self.join(h, k)?.order() == size)
    }

    /// Every subgroup, ascending. Bounded by `Limits::subgroup_enumeration_bound`.
    ///
    /// Cyclic subgroups are found first; every other subgroup is reached by
    /// joining a smaller one with a cyclic subgroup.
    pub fn all_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache()
            .all_subgroups
            .get_or_init(|| self.compute_all_subgroups())
            .clone()
    }

    fn compute_all_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        let limits = self.limits();
        if self.order() > limits.subgroup_enumeration_bound {
            return Err(GroupError::CapExceeded {
                what: "subgroup enumeration",
                cap: limits.subgroup_enumeration_bound,
            });
        }
        let mut cyclic: BTreeSet<Subgroup> = BTreeSet::new();
        for x in self.elements() {
            cyclic.insert(self.generate(&[x])?);
        }
        let cyclic: Vec<Subgroup> = cyclic.into_iter().collect();
        let mut found: HashSet<ElementSet> = cyclic.iter().map(|c| c.members().clone()).collect();
        let mut all: Vec<Subgroup> = cyclic.clone();
        let mut frontier: Vec<Subgroup> = cyclic.clone();
        while let Some(s) = frontier.pop() {
            for c in &cyclic {
                if c.is_subgroup_of(&s) {
                    continue;
                }
                let t = self.join(&s, c)?;
                if found.insert(t.members().clone()) {
                    if all.len() >= limits.lattice_node_cap {
                        return Err(GroupError::CapExceeded {
                            what: "subgroup lattice",
                            cap: limits.lattice_node_cap,
                        });
                    }
                    all.push(t.clone());
                    frontier.push(t);
                }
            }
        }
        all.sort();
        Ok(Arc::new(all))
    }

    /// The lattice of normal subgroups: the join-closure of the normal closures
    /// of single elements (one per conjugacy class).
    pub fn normal_subgroups(&self) -> Result<NormalLattice> {
        let nodes = self
            .cache()
            .normal_lattice
            .get_or_init(|| self.compute_normal_lattice())
            .clone()?;
        Ok(NormalLattice { nodes })
    }

    fn compute_normal_lattice(&self) -> Result<Arc<Vec<Subgroup>>> {
        let cap = self.limits().lattice_node_cap;
        let mut class_seen = self.empty_set();
        let mut nodes: BTreeSet<Subgroup> = BTreeSet::new();
        nodes.insert(self.trivial_subgroup());
        nodes.insert(self.whole());
        for x in self.elements() {
            if class_seen.contains(x.index()) {
                continue;
            }
            for g in self.elements() {
                class_seen.insert(self.conjugate(x, g).index());
            }
            nodes.insert(self.normal_closure(&[x])?);
        }
        // join-closure, smallest pending node first
        let mut pending: BTreeSet<Subgroup> = nodes.clone();
        while let Some(n) = pending.pop_first() {
            let current: Vec<Subgroup> = nodes.iter().cloned().collect();
            for m in current {
                if m.is_subgroup_of(&n) || n.is_subgroup_of(&m) {
                    continue;
                }
                let j = self.join(&n, &m)?;
                if !nodes.contains(&j) {
                    if nodes.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            what: "normal subgroup lattice",
                            cap,
                        });
                    }
                    nodes.insert(j.clone());
                    pending.insert(j);
                }
            }
        }
        Ok(Arc::new(nodes.into_iter().collect()))
    }

    pub fn minimal_normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        if self.is_trivial() {
            return Err(GroupError::TrivialGroup);
        }
        Ok(self.normal_subgroups()?.minimal_nontrivial())
    }

    /// Subnormality by normal-closure descent: `K₀ = G`, `K_{i+1} = H^{K_i}`,
    /// until the chain stabilizes; `H` is subnormal iff it stabilizes at `H`.
    pub fn is_subnormal(&self, h: &Subgroup) -> Result<bool> {
        self.owns(h)?;
        let mut k = self.whole();
        loop {
            let next = self.normal_closure_in(h, &k)?;
            if next == k {
                return Ok(k == *h);
            }
            k = next;
        }
    }

    /// `O_p(G)`, the largest normal `p`-subgroup. Trivial when `p` is not a
    /// prime dividing `|G|`.
    pub fn o_p(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) || !(self.order() as u64).is_multiple_of(p) {
            return Ok(self.trivial_subgroup());
        }
        let sylows = self.all_sylow_subgroups(p)?;
        let mut members = self.all_elements_set();
        for s in sylows.iter() {
            members.intersect_with(s.members());
        }
        Ok(self.subgroup_from_closed_set(members))
    }

    /// `F(G)`, the join of all `O_p(G)`.
    pub fn fitting_subgroup(&self) -> Result<Subgroup> {
        let mut f = self.trivial_subgroup();
        for p in prime_divisors(self.order() as u64) {
            let op = self.o_p(p)?;
            f = self.join(&f, &op)?;
        }
        Ok(f)
    }
}

/// Nonzero vectors of `F_p^d` whose first nonzero entry is 1.
fn normalized_vectors(p: u64, d: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        let count = (p as usize).pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![0u64; d];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (code % p as usize) as u64;
                code /= p as usize;
            }
            out.push(v);
        }
    }
    out
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

    fn s3() -> Group {
        perm_group(3, &["(1 2)", "(1 2 3)"])
    }

    fn order_two(g: &Group) -> Subgroup {
        let t = g.elements().find(|&e| g.element_order(e).unwrap() == 2).unwrap();
        g.generate(&[t]).unwrap()
    }

    #[test]
    fn s3_derived_and_closures() {
        let g = s3();
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 3);
        let t = order_two(&g);
        assert_eq!(g.normal_closure(t.generators()).unwrap().order(), 6);
        assert!(g.normal_closure(&[g.identity()]).unwrap().is_trivial());
        assert!(g.core(&t).unwrap().is_trivial());
        assert!(!g.is_normal(&t).unwrap());
        assert!(g.is_normal(&g.whole()).unwrap());
        assert!(!g.is_subnormal(&t).unwrap());
        assert!(g.is_subnormal(&d).unwrap());
    }

    #[test]
    fn abelian_derived_is_trivial() {
        let g = perm_group(4, &["(1 2 3 4)"]);
        assert!(g.derived_subgroup().is_trivial());
    }

    #[test]
    fn commutator_subgroup_matches_brute_force() {
        let g = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        let subs = g.all_subgroups().unwrap();
        for h in subs.iter().step_by(3) {
            for k in subs.iter().step_by(4) {
                let fast = g.commutator_subgroup(h, k).unwrap();
                let comms: Vec<Elem> = h
                    .elements()
                    .flat_map(|x| k.elements().map(move |y| (x, y)))
                    .map(|(x, y)| g.commutator(x, y))
                    .collect();
                assert_eq!(fast, g.generate(&comms).unwrap());
            }
        }
    }

    #[test]
    fn sylow_counts() {
        let g = s3();
        assert_eq!(g.sylow_subgroup(2).unwrap().order(), 2);
        assert_eq!(g.all_sylow_subgroups(2).unwrap().len(), 3);
        assert_eq!(g.all_sylow_subgroups(3).unwrap().len(), 1);
        assert!(g.sylow_subgroup(5).unwrap().is_trivial());
        let a4 = perm_group(4, &["(1 2 3)", "(1 2)(3 4)"]);
        assert_eq!(a4.all_sylow_subgroups(3).unwrap().len(), 4);
        assert!(g.sylow_subgroup(4).is_err());
    }

    #[test]
    fn frattini_and_maximal_subgroups() {
        let c9 = perm_group(9, &["(1 2 3 4 5 6 7 8 9)"]);
        let whole = c9.whole();
        assert_eq!(c9.p_group_frattini(&whole).unwrap().order(), 3);
        assert_eq!(c9.maximal_subgroups_of_p_group(&whole).unwrap().len(), 1);
        let e9 = perm_group(6, &["(1 2 3)", "(4 5 6)"]);
        assert!(e9.p_group_frattini(&e9.whole()).unwrap().is_trivial());
        assert_eq!(e9.maximal_subgroups_of_p_group(&e9.whole()).unwrap().len(), 4);
        let g = s3();
        assert_eq!(
            g.p_group_frattini(&g.whole()).unwrap_err(),
            GroupError::NotPGroup { order: 6 }
        );
    }

    #[test]
    fn permutability_in_s3() {
        let g = s3();
        let twos = g.all_sylow_subgroups(2).unwrap();
        let (a, b) = (&twos[0], &twos[1]);
        assert_eq!(g.product_set(a, b).unwrap().count_ones(..), 4);
        assert!(!g.permutes(a, b).unwrap());
        assert!(g.permutes(&g.derived_subgroup(), a).unwrap());
        assert_eq!(g.product_set(&g.whole(), a).unwrap(), *g.whole().members());
    }

    #[test]
    fn normal_lattices() {
        let g = s3();
        let lat = g.normal_subgroups().unwrap();
        assert_eq!(lat.nodes().iter().map(|n| n.order()).collect::<Vec<_>>(), vec![1, 3, 6]);
        assert_eq!(g.minimal_normal_subgroups().unwrap().len(), 1);
        let q8 = perm_group(
            8,
            &["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"],
        );
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.normal_subgroups().unwrap().len(), 6);
        let v4 = perm_group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(v4.minimal_normal_subgroups().unwrap().len(), 3);
        assert_eq!(Group::trivial().minimal_normal_subgroups(), Err(GroupError::TrivialGroup));
    }

    #[test]
    fn fitting_subgroups() {
        let g = s3();
        assert_eq!(g.fitting_subgroup().unwrap().order(), 3);
        assert!(g.o_p(2).unwrap().is_trivial());
        assert!(g.o_p(0).unwrap().is_trivial());
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(s4.fitting_subgroup().unwrap().order(), 4);
        let d4 = perm_group(4, &["(1 3)", "(1 2 3 4)"]);
        assert_eq!(d4.fitting_subgroup().unwrap().order(), 8);
    }

    #[test]
    fn all_subgroups_counts() {
        assert_eq!(s3().all_subgroups().unwrap().len(), 6);
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(s4.all_subgroups().unwrap().len(), 30);
        let d4 = perm_group(4, &["(1 3)", "(1 2 3 4)"]);
        assert_eq!(d4.all_subgroups().unwrap().len(), 10);
    }

    #[test]
    fn normalized_vector_count() {
        assert_eq!(normalized_vectors(3, 3).len(), 13);
        assert_eq!(normalized_vectors(2, 4).len(), 15);
    }
}

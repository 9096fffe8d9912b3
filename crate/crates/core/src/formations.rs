//! Class membership (nilpotent, supersoluble, w-supersoluble), ℙ-subnormal
//! chains and formation residuals.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_divisors};
use crate::error::{GroupError, Result};
use crate::group::{ElementSet, Group, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Formation {
    /// 𝔑
    Nilpotent,
    /// 𝔘
    Supersoluble,
    /// w𝔘: every Sylow subgroup is ℙ-subnormal.
    WSupersoluble,
}

impl Formation {
    pub const ALL: [Formation; 3] = [
        Formation::Nilpotent,
        Formation::Supersoluble,
        Formation::WSupersoluble,
    ];

    fn key(self) -> u8 {
        match self {
            Formation::Nilpotent => 0,
            Formation::Supersoluble => 1,
            Formation::WSupersoluble => 2,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Formation::Nilpotent => "n",
            Formation::Supersoluble => "u",
            Formation::WSupersoluble => "wu",
        }
    }
}

impl fmt::Display for Formation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formation::Nilpotent => "nilpotent",
            Formation::Supersoluble => "supersoluble",
            Formation::WSupersoluble => "w-supersoluble",
        })
    }
}

impl FromStr for Formation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "n" | "nilpotent" => Ok(Formation::Nilpotent),
            "u" | "supersoluble" => Ok(Formation::Supersoluble),
            "wu" | "w-supersoluble" => Ok(Formation::WSupersoluble),
            other => Err(format!("unknown formation {other:?} (expected u, wu or n)")),
        }
    }
}

/// `H = H₀ < H₁ < … < Hₙ = K` with every `|Hᵢ : Hᵢ₋₁|` prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSubnormalChain {
    links: Vec<Subgroup>,
    indices: Vec<u64>,
}

impl PSubnormalChain {
    pub fn links(&self) -> &[Subgroup] {
        &self.links
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    /// Number of steps; zero when `H = K`.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.links.iter().map(Subgroup::order).collect()
    }
}

impl Group {
    fn cached_membership(&self, f: Formation, compute: impl FnOnce() -> Result<bool>) -> Result<bool> {
        if let Some(&v) = self.cache().membership.lock().expect("membership cache").get(&f.key()) {
            return Ok(v);
        }
        let v = compute()?;
        self.cache()
            .membership
            .lock()
            .expect("membership cache")
            .insert(f.key(), v);
        Ok(v)
    }

    /// Every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> Result<bool> {
        self.cached_membership(Formation::Nilpotent, || {
            for p in prime_divisors(self.order() as u64) {
                if !self.is_normal(&self.sylow_subgroup(p)?)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    /// `G = 1`, or some normal subgroup `N` of prime order has `G/N` supersoluble.
    ///
    /// Supersolubility passes to quotients, so the first prime-order normal
    /// subgroup found decides the question; the recursion never branches.
    pub fn is_supersoluble(&self) -> Result<bool> {
        self.cached_membership(Formation::Supersoluble, || {
            if self.is_trivial() {
                return Ok(true);
            }
            match self.prime_order_normal_subgroup()? {
                Some(n) => self.quotient(&n)?.group.is_supersoluble(),
                None => Ok(false),
            }
        })
    }

    /// Least-indexed normal subgroup of prime order, if any.
    pub fn prime_order_normal_subgroup(&self) -> Result<Option<Subgroup>> {
        let orders = self.element_orders();
        for x in self.elements() {
            if !is_prime(orders[x.index()] as u64) {
                continue;
            }
            let cyclic = self.generate(&[x])?;
            if self
                .generators()
                .iter()
                .all(|&g| cyclic.contains(self.conjugate(x, g)))
            {
                return Ok(Some(cyclic));
            }
        }
        Ok(None)
    }

    /// For every prime, one Sylow subgroup has a ℙ-subnormal chain.
    /// Conjugation carries chains to chains, so one representative suffices.
    pub fn is_w_supersoluble(&self) -> Result<bool> {
        self.cached_membership(Formation::WSupersoluble, || {
            for p in prime_divisors(self.order() as u64) {
                let s = self.sylow_subgroup(p)?;
                if self.p_subnormal_chain(&s)?.is_none() {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    pub fn is_member(&self, f: Formation) -> Result<bool> {
        match f {
            Formation::Nilpotent => self.is_nilpotent(),
            Formation::Supersoluble => self.is_supersoluble(),
            Formation::WSupersoluble => self.is_w_supersoluble(),
        }
    }

    /// Membership of a subgroup regarded as a group.
    pub fn subgroup_is_member(&self, h: &Subgroup, f: Formation) -> Result<bool> {
        self.induced(h)?.group.is_member(f)
    }

    pub fn is_soluble(&self) -> Result<bool> {
        let mut h = self.whole();
        loop {
            let d = self.commutator_subgroup(&h, &h)?;
            if d == h {
                return Ok(h.is_trivial());
            }
            h = d;
        }
    }

    pub fn p_subnormal_chain(&self, h: &Subgroup) -> Result<Option<PSubnormalChain>> {
        self.p_subnormal_chain_within(h, &self.whole())
    }

    /// Searches for a chain from `h` up to `k` with prime indices.
    ///
    /// Best-first upward search: nodes are expanded smallest order first, ties
    /// broken by member set. The successors of `S` are the subgroups `⟨S, g⟩`
    /// (`g ∈ K ∖ S`) of prime index over `S`; one `g` per coset `Sg` is tried.
    pub fn p_subnormal_chain_within(&self, h: &Subgroup, k: &Subgroup) -> Result<Option<PSubnormalChain>> {
        self.owns(h)?;
        self.owns(k)?;
        if !h.is_subgroup_of(k) {
            return Err(GroupError::Validation(
                "chain start is not contained in the chain end".into(),
            ));
        }
        let mut parent: HashMap<ElementSet, Option<Subgroup>> = HashMap::new();
        parent.insert(h.members().clone(), None);
        let mut heap = BinaryHeap::from([Reverse(h.clone())]);
        let mut reached = None;
        'search: while let Some(Reverse(s)) = heap.pop() {
            if s == *k {
                reached = Some(s);
                break;
            }
            let mut covered = s.members().clone();
            for g in k.elements() {
                if covered.contains(g.index()) {
                    continue;
                }
                let t = self.extend(&s, &[g])?;
                let index = (t.order() / s.order()) as u64;
                if is_prime(index) {
                    covered.union_with(t.members());
                    if !parent.contains_key(t.members()) {
                        parent.insert(t.members().clone(), Some(s.clone()));
                        if t == *k {
                            reached = Some(t);
                            break 'search;
                        }
                        heap.push(Reverse(t));
                    }
                } else {
                    for x in s.elements() {
                        covered.insert(self.mul(x, g).index());
                    }
                }
            }
        }
        let Some(top) = reached else {
            return Ok(None);
        };
        let mut links = vec![top];
        while let Some(Some(prev)) = parent.get(links.last().expect("nonempty").members()) {
            links.push(prev.clone());
        }
        links.reverse();
        let indices = links
            .windows(2)
            .map(|w| (w[1].order() / w[0].order()) as u64)
            .collect();
        Ok(Some(PSubnormalChain { links, indices }))
    }

    /// The 𝔉-residual: the least normal subgroup with quotient in `f`.
    ///
    /// Scans the normal lattice upward and returns the first qualifying node,
    /// then confirms that every other qualifying node contains it.
    pub fn residual(&self, f: Formation) -> Result<Subgroup> {
        if let Some(r) = self.cache().residuals.lock().expect("residual cache").get(&f.key()) {
            return Ok(r.clone());
        }
        let r = self.compute_residual(f)?;
        self.cache()
            .residuals
            .lock()
            .expect("residual cache")
            .insert(f.key(), r.clone());
        Ok(r)
    }

    fn compute_residual(&self, f: Formation) -> Result<Subgroup> {
        if self.is_member(f)? {
            return Ok(self.trivial_subgroup());
        }
        let lattice = self.normal_subgroups()?;
        let mut found = None;
        for n in lattice.nodes() {
            if self.quotient(n)?.group.is_member(f)? {
                found = Some(n.clone());
                break;
            }
        }
        let r = found.ok_or_else(|| {
            GroupError::Invariant("no normal subgroup has quotient in the formation".into())
        })?;
        for n in lattice.nodes() {
            if !r.is_subgroup_of(n) && self.quotient(n)?.group.is_member(f)? {
                return Err(GroupError::Invariant(format!(
                    "{f} residual not unique: orders {} and {} both qualify",
                    r.order(),
                    n.order()
                )));
            }
        }
        Ok(r)
    }

    /// Residual of a subgroup regarded as a group, mapped back into `self`.
    pub fn subgroup_residual(&self, h: &Subgroup, f: Formation) -> Result<Subgroup> {
        let induced = self.induced(h)?;
        let r = induced.group.residual(f)?;
        induced.lift(self, &r)
    }

    /// Repeatedly split off the Sylow subgroup for the largest remaining prime;
    /// true iff each one is normal in what remains.
    pub fn sylow_tower_supersoluble_type(&self) -> Result<bool> {
        let mut current = self.clone();
        while !current.is_trivial() {
            let p = *prime_divisors(current.order() as u64)
                .last()
                .expect("nontrivial order");
            let s = current.sylow_subgroup(p)?;
            if !current.is_normal(&s)? {
                return Ok(false);
            }
            current = current.quotient(&s)?.group;
        }
        Ok(true)
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
    fn basic_memberships() {
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        assert!(!s3.is_nilpotent().unwrap());
        assert!(s3.is_supersoluble().unwrap());
        assert!(s3.is_w_supersoluble().unwrap());
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(!s4.is_supersoluble().unwrap());
        let c12 = perm_group(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]);
        assert!(c12.is_supersoluble().unwrap() && c12.is_nilpotent().unwrap());
        assert!(Group::trivial().is_supersoluble().unwrap());
    }

    #[test]
    fn a4_chain_and_tower() {
        let a4 = perm_group(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let c3 = a4.sylow_subgroup(3).unwrap();
        assert!(a4.p_subnormal_chain(&c3).unwrap().is_none());
        assert!(!a4.is_w_supersoluble().unwrap());
        assert!(!a4.sylow_tower_supersoluble_type().unwrap());
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        assert!(s3.sylow_tower_supersoluble_type().unwrap());
        let v4 = a4.sylow_subgroup(2).unwrap();
        let chain = a4.p_subnormal_chain(&v4).unwrap().unwrap();
        assert_eq!(chain.indices(), &[3]);
    }

    #[test]
    fn chain_to_self_is_empty() {
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        let chain = s3.p_subnormal_chain(&s3.whole()).unwrap().unwrap();
        assert!(chain.is_empty());
        assert_eq!(chain.links().len(), 1);
    }

    #[test]
    fn s3_nilpotent_residual() {
        let s3 = perm_group(3, &["(1 2)", "(1 2 3)"]);
        let r = s3.residual(Formation::Nilpotent).unwrap();
        assert_eq!(r.order(), 3);
        assert!(s3.residual(Formation::Supersoluble).unwrap().is_trivial());
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(s4.residual(Formation::Supersoluble).unwrap().order(), 4);
        assert_eq!(s4.residual(Formation::Nilpotent).unwrap().order(), 12);
    }

    #[test]
    fn solubility() {
        let s4 = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(s4.is_soluble().unwrap());
        let a5 = perm_group(5, &["(1 2 3)", "(3 4 5)"]);
        assert_eq!(a5.order(), 60);
        assert!(!a5.is_soluble().unwrap());
        assert!(!a5.is_supersoluble().unwrap());
        assert_eq!(a5.residual(Formation::Supersoluble).unwrap().order(), 60);
    }

    #[test]
    fn formation_names_parse() {
        assert_eq!("wu".parse::<Formation>().unwrap(), Formation::WSupersoluble);
        assert_eq!("U".parse::<Formation>().unwrap(), Formation::Supersoluble);
        assert!("x".parse::<Formation>().is_err());
    }
}

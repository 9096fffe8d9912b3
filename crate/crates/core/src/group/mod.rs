//! Fully enumerated finite groups.
//!
//! Every [`Group`] is materialized as a Cayley table over element indices
//! `0..order`, with index 0 the identity. Indices are assigned in ascending
//! order of each backend's canonical form, so "least canonical element" and
//! "least index" coincide.

pub mod collect;
mod induced;
mod quotient;
pub mod semidirect;
mod subgroup;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use fixedbitset::FixedBitSet;
use sha2::{Digest, Sha256};

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

pub use collect::{ClassTwoCollector, CommutatorRelation};
pub use induced::Induced;
pub use quotient::Quotient;
pub use semidirect::{ActionSpec, SemidirectProduct};
pub use subgroup::Subgroup;

/// Membership bitset over element indices of one group.
pub type ElementSet = FixedBitSet;

/// Handle to an element of a specific group: its index in the Cayley table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn new(index: usize) -> Self {
        Elem(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Backend-specific canonical form of an element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Row index in an explicit multiplication table.
    Index(u32),
    /// Image tuple of a permutation (0-based).
    Image(Vec<u16>),
    /// `(normal-factor index, acting-factor index)` of a semidirect product.
    Pair(u32, u32),
    /// Least parent element of the coset.
    Coset(u32),
}

/// Size bounds applied during construction and exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group that may be enumerated.
    pub enumeration_cap: usize,
    /// Largest normal-subgroup lattice.
    pub lattice_node_cap: usize,
    /// Largest group whose full subgroup list may be computed.
    pub subgroup_enumeration_bound: usize,
    /// Largest number of generator-image tuples tried by automorphism search.
    pub automorphism_candidate_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: 20_000,
            lattice_node_cap: 10_000,
            subgroup_enumeration_bound: 200,
            automorphism_candidate_cap: 1_000_000,
        }
    }
}

static GLOBAL_LIMITS: RwLock<Option<Limits>> = RwLock::new(None);

impl Limits {
    /// Limits used by constructors that do not take them explicitly.
    pub fn global() -> Limits {
        GLOBAL_LIMITS
            .read()
            .map(|g| g.unwrap_or_default())
            .unwrap_or_default()
    }

    pub fn set_global(limits: Limits) {
        if let Ok(mut g) = GLOBAL_LIMITS.write() {
            *g = Some(limits);
        }
    }
}

pub(crate) enum Backend {
    Permutation {
        degree: usize,
        elements: Vec<Permutation>,
    },
    Table,
    Semidirect {
        normal: Group,
        acting: Group,
        action: ActionSpec,
    },
    Quotient {
        parent: Group,
        normal: Subgroup,
        representatives: Vec<Elem>,
    },
}

/// Which construction produced a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendKind {
    Permutation,
    Table,
    Semidirect,
    Quotient,
}

#[derive(Default)]
pub(crate) struct GroupCache {
    pub element_orders: OnceLock<Vec<u32>>,
    pub words: OnceLock<Vec<Vec<u16>>>,
    pub fingerprint: OnceLock<String>,
    pub derived: OnceLock<Subgroup>,
    pub all_subgroups: OnceLock<Result<Arc<Vec<Subgroup>>>>,
    pub normal_lattice: OnceLock<Result<Arc<Vec<Subgroup>>>>,
    pub sylow: Mutex<BTreeMap<u64, Subgroup>>,
    pub sylow_all: Mutex<BTreeMap<u64, Arc<Vec<Subgroup>>>>,
    pub induced: Mutex<HashMap<ElementSet, Arc<Induced>>>,
    pub membership: Mutex<HashMap<u8, bool>>,
    pub residuals: Mutex<HashMap<u8, Subgroup>>,
}

pub(crate) struct GroupInner {
    id: u64,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<Elem>,
    generator_names: Vec<String>,
    pub(crate) backend: Backend,
    limits: Limits,
    pub(crate) cache: GroupCache,
}

/// A finite group with all elements enumerated. Cloning is cheap.
///
/// Groups never change after construction; the lazily filled caches behind
/// them are synchronized, so a `Group` may be shared across threads.
#[derive(Clone)]
pub struct Group(Arc<GroupInner>);

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("id", &self.0.id)
            .field("order", &self.0.order)
            .field("backend", &self.backend_kind())
            .field("generators", &self.0.generator_names)
            .finish()
    }
}

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Closes `generators` under multiplication, sorts the result by canonical
/// form and tabulates the product. Returns `(elements, table, generator indices)`.
pub(crate) fn materialize<T, F>(
    identity: T,
    generators: &[T],
    mul: F,
    cap: usize,
) -> Result<(Vec<T>, Vec<u32>, Vec<Elem>)>
where
    T: Clone + Eq + Hash + Ord,
    F: Fn(&T, &T) -> T,
{
    let mut seen: HashMap<T, ()> = HashMap::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity, ());
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        next += 1;
        for g in generators {
            let y = mul(&x, g);
            if !seen.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded {
                        what: "element enumeration",
                        cap,
                    });
                }
                seen.insert(y.clone(), ());
                elements.push(y);
            }
        }
    }
    elements.sort();
    let index: HashMap<&T, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, t)| (t, i as u32))
        .collect();
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            table[i * n + j] = index[&mul(x, y)];
        }
    }
    let gens = generators.iter().map(|g| Elem(index[g])).collect();
    Ok((elements, table, gens))
}

impl Group {
    pub(crate) fn assemble(
        order: usize,
        table: Vec<u32>,
        generators: Vec<Elem>,
        generator_names: Vec<String>,
        backend: Backend,
        limits: Limits,
    ) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            inverses[i] = row.iter().position(|&v| v == 0).expect("latin row") as u32;
        }
        Group(Arc::new(GroupInner {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            order,
            table,
            inverses,
            generators,
            generator_names,
            backend,
            limits,
            cache: GroupCache::default(),
        }))
    }

    pub(crate) fn inner(&self) -> &GroupInner {
        &self.0
    }

    pub(crate) fn cache(&self) -> &GroupCache {
        &self.0.cache
    }

    pub fn trivial() -> Group {
        Group::assemble(
            1,
            vec![0],
            Vec::new(),
            Vec::new(),
            Backend::Table,
            Limits::global(),
        )
    }

    /// Permutation group on `degree` points generated by `generators`.
    pub fn from_permutations(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        let names = default_names("g", generators.len());
        Group::from_permutations_named(degree, generators, names, Limits::global())
    }

    pub fn from_permutations_named(
        degree: usize,
        generators: Vec<Permutation>,
        names: Vec<String>,
        limits: Limits,
    ) -> Result<Group> {
        if names.len() != generators.len() {
            return Err(GroupError::Validation(
                "generator names and generators differ in length".into(),
            ));
        }
        if let Some(bad) = generators.iter().find(|p| p.degree() != degree) {
            return Err(GroupError::Validation(format!(
                "generator {bad} has degree {} but {degree} was declared",
                bad.degree()
            )));
        }
        let (elements, table, gens) = materialize(
            Permutation::identity(degree),
            &generators,
            |x, y| x.compose(y),
            limits.enumeration_cap,
        )?;
        Ok(Group::assemble(
            elements.len(),
            table,
            gens,
            names,
            Backend::Permutation { degree, elements },
            limits,
        ))
    }

    /// Group from an explicit multiplication table (`rows[i][j]` = index of `i*j`).
    ///
    /// Index 0 must be the identity. The table is checked to be a latin square
    /// and associative (exhaustively up to order 256, on a fixed sample above).
    /// If `generators` is `None` a greedy generating set is chosen.
    pub fn from_table(
        rows: &[Vec<u32>],
        generators: Option<Vec<Elem>>,
        names: Option<Vec<String>>,
    ) -> Result<Group> {
        Group::from_table_with_limits(rows, generators, names, Limits::global())
    }

    pub fn from_table_with_limits(
        rows: &[Vec<u32>],
        generators: Option<Vec<Elem>>,
        names: Option<Vec<String>>,
        limits: Limits,
    ) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Validation("empty table".into()));
        }
        if n > limits.enumeration_cap {
            return Err(GroupError::CapExceeded {
                what: "element enumeration",
                cap: limits.enumeration_cap,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Validation(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        validate_table(n, &table)?;
        let provisional = Group::assemble(
            n,
            table.clone(),
            Vec::new(),
            Vec::new(),
            Backend::Table,
            limits,
        );
        let gens = match generators {
            Some(g) => {
                if let Some(bad) = g.iter().find(|e| e.index() >= n) {
                    return Err(GroupError::Validation(format!(
                        "generator {bad} outside table of order {n}"
                    )));
                }
                let span = provisional.generate(&g)?;
                if span.order() != n {
                    return Err(GroupError::Validation(format!(
                        "generators span {} of {n} elements",
                        span.order()
                    )));
                }
                g
            }
            None => provisional.greedy_generators(&provisional.all_elements_set()),
        };
        let names = match names {
            Some(names) if names.len() == gens.len() => names,
            Some(_) => {
                return Err(GroupError::Validation(
                    "generator names and generators differ in length".into(),
                ))
            }
            None => default_names("x", gens.len()),
        };
        Ok(Group::assemble(n, table, gens, names, Backend::Table, limits))
    }

    pub fn direct_product(left: &Group, right: &Group) -> Result<SemidirectProduct> {
        Group::semidirect(left, right, &ActionSpec::trivial(left, right))
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn is_trivial(&self) -> bool {
        self.0.order == 1
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn generators(&self) -> &[Elem] {
        &self.0.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.0.generator_names
    }

    pub fn generator_by_name(&self, name: &str) -> Option<Elem> {
        self.0
            .generator_names
            .iter()
            .position(|n| n == name)
            .map(|i| self.0.generators[i])
    }

    pub fn backend_kind(&self) -> BackendKind {
        match self.0.backend {
            Backend::Permutation { .. } => BackendKind::Permutation,
            Backend::Table => BackendKind::Table,
            Backend::Semidirect { .. } => BackendKind::Semidirect,
            Backend::Quotient { .. } => BackendKind::Quotient,
        }
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.0.order as u32).map(Elem)
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.index() < self.0.order
    }

    pub(crate) fn check_elem(&self, e: Elem) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(GroupError::ForeignElement)
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.table[a.index() * self.0.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.0.inverses[a.index()])
    }

    pub fn pow(&self, a: Elem, exponent: i64) -> Elem {
        let base = if exponent < 0 { self.inv(a) } else { a };
        let mut k = exponent.unsigned_abs();
        let mut acc = Elem::IDENTITY;
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            k >>= 1;
        }
        acc
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// Least `k ≥ 1` with `g^k = 1`.
    pub fn element_order(&self, g: Elem) -> Result<usize> {
        self.check_elem(g)?;
        Ok(self.element_orders()[g.index()] as usize)
    }

    pub(crate) fn element_orders(&self) -> &[u32] {
        self.0.cache.element_orders.get_or_init(|| {
            (0..self.0.order as u32)
                .map(|i| {
                    let g = Elem(i);
                    let mut k = 1;
                    let mut x = g;
                    while x != Elem::IDENTITY {
                        x = self.mul(x, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// True iff the group has order `n` and contains an element of order `n`.
    pub fn is_cyclic_of_order(&self, n: usize) -> bool {
        self.order() == n && self.element_orders().iter().any(|&o| o as usize == n)
    }

    pub fn label(&self, e: Elem) -> Label {
        match &self.0.backend {
            Backend::Permutation { elements, .. } => {
                Label::Image(elements[e.index()].images().to_vec())
            }
            Backend::Table => Label::Index(e.0),
            Backend::Semidirect { acting, .. } => {
                let h = acting.order() as u32;
                Label::Pair(e.0 / h, e.0 % h)
            }
            Backend::Quotient {
                representatives, ..
            } => Label::Coset(representatives[e.index()].0),
        }
    }

    /// The permutation behind `e` when this is a permutation group.
    pub fn permutation(&self, e: Elem) -> Option<&Permutation> {
        match &self.0.backend {
            Backend::Permutation { elements, .. } => elements.get(e.index()),
            _ => None,
        }
    }

    pub fn permutation_degree(&self) -> Option<usize> {
        match &self.0.backend {
            Backend::Permutation { degree, .. } => Some(*degree),
            _ => None,
        }
    }

    /// Row-major copy of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<u32>> {
        let n = self.0.order;
        self.0.table.chunks(n).map(|r| r.to_vec()).collect()
    }

    /// SHA-256 over the order and multiplication table; equal for groups with
    /// identical canonical tables.
    pub fn fingerprint(&self) -> &str {
        self.0.cache.fingerprint.get_or_init(|| {
            let mut hasher = Sha256::new();
            hasher.update((self.0.order as u64).to_le_bytes());
            for v in &self.0.table {
                hasher.update(v.to_le_bytes());
            }
            hex::encode(hasher.finalize())
        })
    }

    /// Shortest word (generator indices, left to right) for every element.
    pub(crate) fn words(&self) -> &[Vec<u16>] {
        self.0.cache.words.get_or_init(|| {
            let n = self.0.order;
            let mut words: Vec<Option<Vec<u16>>> = vec![None; n];
            words[0] = Some(Vec::new());
            let mut queue = VecDeque::from([Elem::IDENTITY]);
            while let Some(x) = queue.pop_front() {
                for (k, &g) in self.0.generators.iter().enumerate() {
                    let y = self.mul(x, g);
                    if words[y.index()].is_none() {
                        let mut w = words[x.index()].clone().unwrap_or_default();
                        w.push(k as u16);
                        words[y.index()] = Some(w);
                        queue.push_back(y);
                    }
                }
            }
            words.into_iter().map(|w| w.unwrap_or_default()).collect()
        })
    }

    /// Evaluates a word given as `(generator index, exponent)` factors.
    pub fn evaluate_word(&self, word: &[(usize, i64)]) -> Result<Elem> {
        let mut acc = Elem::IDENTITY;
        for &(g, e) in word {
            let gen = *self
                .0
                .generators
                .get(g)
                .ok_or_else(|| GroupError::Validation(format!("generator index {g} undeclared")))?;
            acc = self.mul(acc, self.pow(gen, e));
        }
        Ok(acc)
    }

    /// Word for `e` as `(generator index, exponent)` factors with runs collapsed.
    pub fn word_of(&self, e: Elem) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &g in &self.words()[e.index()] {
            match out.last_mut() {
                Some((last, exp)) if *last == g as usize => *exp += 1,
                _ => out.push((g as usize, 1)),
            }
        }
        out
    }

    /// `e` written in generator names, e.g. `g4^2*b`; the identity is `1`.
    pub fn format_word(&self, e: Elem) -> String {
        let word = self.word_of(e);
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|&(g, k)| {
                let name = &self.0.generator_names[g];
                if k == 1 {
                    name.clone()
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub(crate) fn empty_set(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.0.order)
    }

    pub(crate) fn all_elements_set(&self) -> ElementSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Adds `g` to the subgroup held in `members` (closed on entry) using
    /// Dimino's coset extension. `gens` must generate `members` and is extended.
    pub(crate) fn extend_closed(&self, members: &mut ElementSet, gens: &mut Vec<Elem>, g: Elem) {
        if members.contains(g.index()) {
            return;
        }
        gens.push(g);
        let old: Vec<Elem> = members.ones().map(|i| Elem(i as u32)).collect();
        let mut reps = vec![Elem::IDENTITY];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for &s in gens.iter() {
                let t = self.mul(r, s);
                if !members.contains(t.index()) {
                    for &h in &old {
                        members.insert(self.mul(h, t).index());
                    }
                    reps.push(t);
                }
            }
        }
    }

    /// Greedy generating set of a subgroup given by its members.
    pub(crate) fn greedy_generators(&self, members: &ElementSet) -> Vec<Elem> {
        let mut span = self.empty_set();
        span.insert(0);
        let mut gens = Vec::new();
        for i in members.ones() {
            if !span.contains(i) {
                self.extend_closed(&mut span, &mut gens, Elem(i as u32));
            }
        }
        gens
    }
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn validate_table(n: usize, table: &[u32]) -> Result<()> {
    for i in 0..n {
        if table[i] as usize != i || table[i * n] as usize != i {
            return Err(GroupError::Validation("index 0 is not the identity".into()));
        }
    }
    let mut seen = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if v >= n {
                return Err(GroupError::Validation(format!("entry {v} out of range")));
            }
            if seen[v] == i + 1 {
                return Err(GroupError::Validation(format!("row {i} repeats {v}")));
            }
            seen[v] = i + 1;
        }
    }
    let mut seen = vec![0usize; n];
    for j in 0..n {
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == j + 1 {
                return Err(GroupError::Validation(format!("column {j} repeats {v}")));
            }
            seen[v] = j + 1;
        }
    }
    let m = |a: usize, b: usize| table[a * n + b] as usize;
    let check = |a: usize, b: usize, c: usize| -> Result<()> {
        if m(m(a, b), c) != m(a, m(b, c)) {
            Err(GroupError::Validation(format!(
                "not associative at ({a}, {b}, {c})"
            )))
        } else {
            Ok(())
        }
    };
    if n <= 256 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        // fixed linear-congruential sample
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        };
        for _ in 0..200_000 {
            let (a, b, c) = (next(), next(), next());
            check(a, b, c)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> Group {
        Group::from_permutations(
            3,
            vec![
                Permutation::parse_cycles(3, "(1 2)").unwrap(),
                Permutation::parse_cycles(3, "(1 2 3)").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn trivial_group_enumerates_identity() {
        let g = Group::trivial();
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_order(Elem::IDENTITY).unwrap(), 1);
        assert!(g.is_cyclic_of_order(1));
        let p = Group::from_permutations(4, vec![]).unwrap();
        assert_eq!(p.order(), 1);
    }

    #[test]
    fn s3_closure_has_six_elements() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(Elem::IDENTITY), Label::Image(vec![0, 1, 2]));
        assert!(!g.is_cyclic_of_order(6));
        let max_order = g.elements().map(|e| g.element_order(e).unwrap()).max();
        assert_eq!(max_order, Some(3));
    }

    #[test]
    fn cap_is_enforced() {
        let limits = Limits {
            enumeration_cap: 5,
            ..Limits::default()
        };
        let err = Group::from_permutations_named(
            3,
            vec![
                Permutation::parse_cycles(3, "(1 2)").unwrap(),
                Permutation::parse_cycles(3, "(1 2 3)").unwrap(),
            ],
            vec!["a".into(), "b".into()],
            limits,
        )
        .unwrap_err();
        assert!(err.is_cap_exceeded());
    }

    #[test]
    fn foreign_element_is_rejected() {
        let g = s3();
        assert_eq!(g.element_order(Elem::new(6)), Err(GroupError::ForeignElement));
    }

    #[test]
    fn table_round_trip_and_validation() {
        let g = s3();
        let rows = g.table_rows();
        let h = Group::from_table(&rows, None, None).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.table_rows(), rows);
        let mut broken = rows.clone();
        broken[1].swap(2, 3);
        assert!(Group::from_table(&broken, None, None).is_err());
    }

    #[test]
    fn words_evaluate_back() {
        let g = s3();
        for e in g.elements() {
            assert_eq!(g.evaluate_word(&g.word_of(e)).unwrap(), e);
        }
    }
}

//! Construction of test instances: a recipe library of small groups,
//! semidirect families, factorization harvesting, and the order-972 example.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use log::{debug, info};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::formations::Formation;
use crate::group::collect::{ClassTwoCollector, CommutatorRelation};
use crate::group::semidirect::{extend_to_automorphism, ActionSpec};
use crate::group::{Elem, Group, Limits, Subgroup};
use crate::perm::Permutation;
use crate::products::{FlagFilter, SubgroupSource};

/// A replayable description of how a group was built.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case")]
pub enum Recipe {
    Cyclic { n: usize },
    ElementaryAbelian { p: usize, rank: usize },
    /// Symmetries of a regular `n`-gon, order `2n`.
    Dihedral { n: usize },
    /// `⟨x, y | x^{2n}, y² = x^n, x^y = x⁻¹⟩`, order `4n`; `n = 2` is Q8.
    Dicyclic { n: usize },
    Symmetric { degree: usize },
    Alternating { degree: usize },
    Direct { left: Box<Recipe>, right: Box<Recipe> },
    /// `action` indexes the list produced by [`enumerate_actions`].
    Semidirect {
        normal: Box<Recipe>,
        acting: Box<Recipe>,
        action: usize,
    },
    Example972,
    /// A group definition file on disk.
    Document { path: String },
}

impl Recipe {
    pub fn cyclic(n: usize) -> Recipe {
        Recipe::Cyclic { n }
    }

    pub fn direct(left: Recipe, right: Recipe) -> Recipe {
        Recipe::Direct {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn semidirect(normal: Recipe, acting: Recipe, action: usize) -> Recipe {
        Recipe::Semidirect {
            normal: Box::new(normal),
            acting: Box::new(acting),
            action,
        }
    }

    pub fn build(&self) -> Result<Group> {
        self.build_with_limits(Limits::global())
    }

    pub fn build_with_limits(&self, limits: Limits) -> Result<Group> {
        match self {
            Recipe::Cyclic { n } => {
                if *n == 0 {
                    return Err(GroupError::ConstructionInvalid("C0".into()));
                }
                let cycle: Vec<u16> = (1..*n as u16).chain([0]).collect();
                perm_group(*n, vec![cycle], &["a"], limits)
            }
            Recipe::ElementaryAbelian { p, rank } => {
                if !crate::arith::is_prime(*p as u64) {
                    return Err(GroupError::ConstructionInvalid(format!("{p} is not prime")));
                }
                let degree = p * rank;
                let gens = (0..*rank)
                    .map(|r| {
                        let mut img: Vec<u16> = (0..degree as u16).collect();
                        for i in 0..*p {
                            img[r * p + i] = (r * p + (i + 1) % p) as u16;
                        }
                        img
                    })
                    .collect();
                let names: Vec<String> = (1..=*rank).map(|i| format!("e{i}")).collect();
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                perm_group(degree, gens, &names, limits)
            }
            Recipe::Dihedral { n } => match n {
                0 => Err(GroupError::ConstructionInvalid("D0".into())),
                1 => Recipe::Cyclic { n: 2 }.build_with_limits(limits),
                2 => Recipe::ElementaryAbelian { p: 2, rank: 2 }.build_with_limits(limits),
                _ => {
                    let rotation: Vec<u16> = (0..*n).map(|i| ((i + 1) % n) as u16).collect();
                    let reflection: Vec<u16> = (0..*n).map(|i| ((n - i) % n) as u16).collect();
                    perm_group(*n, vec![rotation, reflection], &["r", "s"], limits)
                }
            },
            Recipe::Dicyclic { n } => dicyclic(*n, limits),
            Recipe::Symmetric { degree } => match degree {
                0 | 1 => Ok(Group::trivial()),
                2 => Recipe::Cyclic { n: 2 }.build_with_limits(limits),
                d => {
                    let swap: Vec<u16> = [1u16, 0].into_iter().chain(2..*d as u16).collect();
                    let cycle: Vec<u16> = (1..*d as u16).chain([0]).collect();
                    perm_group(*d, vec![swap, cycle], &["t", "c"], limits)
                }
            },
            Recipe::Alternating { degree } => match degree {
                0..=2 => Ok(Group::trivial()),
                d => {
                    // 3-cycles (1 2 k) generate A_d
                    let gens = (2..*d)
                        .map(|k| {
                            let mut img: Vec<u16> = (0..*d as u16).collect();
                            img[0] = 1;
                            img[1] = k as u16;
                            img[k] = 0;
                            img
                        })
                        .collect();
                    let names: Vec<String> = (1..=d - 2).map(|i| format!("c{i}")).collect();
                    let names: Vec<&str> = names.iter().map(String::as_str).collect();
                    perm_group(*d, gens, &names, limits)
                }
            },
            Recipe::Direct { left, right } => {
                let l = left.build_with_limits(limits)?;
                let r = right.build_with_limits(limits)?;
                Ok(Group::direct_product(&l, &r)?.group)
            }
            Recipe::Semidirect {
                normal,
                acting,
                action,
            } => {
                let n = normal.build_with_limits(limits)?;
                let h = acting.build_with_limits(limits)?;
                let actions = enumerate_actions(&n, &h, limits.automorphism_candidate_cap)?;
                let spec = actions.get(*action).ok_or_else(|| {
                    GroupError::ConstructionInvalid(format!(
                        "action index {action} out of range ({} actions)",
                        actions.len()
                    ))
                })?;
                Ok(Group::semidirect(&n, &h, spec)?.group)
            }
            Recipe::Example972 => Ok(build_example_972()?.group),
            Recipe::Document { path } => {
                let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io(format!("{path}: {e}")))?;
                Ok(crate::io::parse_document(&text)?.build_with_limits(limits)?.group)
            }
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic { n } => write!(f, "C{n}"),
            Recipe::ElementaryAbelian { p, rank } => write!(f, "C{p}^{rank}"),
            Recipe::Dihedral { n } => write!(f, "D{}", 2 * n),
            Recipe::Dicyclic { n: 2 } => write!(f, "Q8"),
            Recipe::Dicyclic { n } => write!(f, "Dic{}", 4 * n),
            Recipe::Symmetric { degree } => write!(f, "S{degree}"),
            Recipe::Alternating { degree } => write!(f, "A{degree}"),
            Recipe::Direct { left, right } => write!(f, "({left}x{right})"),
            Recipe::Semidirect {
                normal,
                acting,
                action,
            } => write!(f, "({normal}:{acting}@{action})"),
            Recipe::Example972 => write!(f, "Example972"),
            Recipe::Document { path } => write!(f, "{path}"),
        }
    }
}

fn perm_group(degree: usize, images: Vec<Vec<u16>>, names: &[&str], limits: Limits) -> Result<Group> {
    let gens = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    Group::from_permutations_named(
        degree,
        gens,
        names.iter().map(|s| s.to_string()).collect(),
        limits,
    )
}

fn dicyclic(n: usize, limits: Limits) -> Result<Group> {
    if n < 1 {
        return Err(GroupError::ConstructionInvalid("Dic0".into()));
    }
    let m = 2 * n;
    // element (a, e) = x^a y^e has index 2a + e
    let index = |a: usize, e: usize| (2 * (a % m) + e) as u32;
    let size = 2 * m;
    let mut rows = vec![vec![0u32; size]; size];
    for a in 0..m {
        for e in 0..2 {
            for b in 0..m {
                for f in 0..2 {
                    let shifted = if e == 1 { a + m - b } else { a + b };
                    let value = if e + f == 2 {
                        index(shifted + n, 0)
                    } else {
                        index(shifted, e + f)
                    };
                    rows[index(a, e) as usize][index(b, f) as usize] = value;
                }
            }
        }
    }
    Group::from_table_with_limits(
        &rows,
        Some(vec![Elem::new(index(1 % m, 0) as usize), Elem::new(index(0, 1) as usize)]),
        Some(vec!["x".into(), "y".into()]),
        limits,
    )
}

/// Every automorphism of `group`, as index tables, found by trying every
/// assignment of same-order elements to the generators.
pub fn automorphisms(group: &Group, candidate_cap: usize) -> Result<Vec<Vec<u32>>> {
    let orders: Vec<usize> = group
        .elements()
        .map(|e| group.element_order(e))
        .collect::<Result<_>>()?;
    let candidates: Vec<Vec<Elem>> = group
        .generators()
        .iter()
        .map(|g| {
            group
                .elements()
                .filter(|e| orders[e.index()] == orders[g.index()])
                .collect()
        })
        .collect();
    let total = candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .unwrap_or(usize::MAX);
    if total > candidate_cap {
        return Err(GroupError::CapExceeded {
            what: "automorphism candidates",
            cap: candidate_cap,
        });
    }
    let mut out = Vec::new();
    for tuple in cartesian(&candidates) {
        if let Some(aut) = extend_to_automorphism(group, &tuple) {
            out.push(aut);
        }
    }
    Ok(out)
}

fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x.clone());
                    next
                })
            })
            .collect()
    })
}

fn automorphism_order(aut: &[u32]) -> usize {
    let mut current: Vec<u32> = aut.to_vec();
    let mut k = 1;
    while current.iter().enumerate().any(|(i, &x)| x as usize != i) {
        current = current.iter().map(|&x| aut[x as usize]).collect();
        k += 1;
    }
    k
}

/// Every valid action of `acting` on `normal`, in a fixed order: each acting
/// generator is sent to an automorphism whose order divides its own, and the
/// assignment must extend to a homomorphism.
pub fn enumerate_actions(normal: &Group, acting: &Group, candidate_cap: usize) -> Result<Vec<ActionSpec>> {
    let auts = automorphisms(normal, candidate_cap)?;
    let aut_orders: Vec<usize> = auts.iter().map(|a| automorphism_order(a)).collect();
    let per_generator: Vec<Vec<usize>> = acting
        .generators()
        .iter()
        .map(|&h| {
            let order = acting.element_order(h).expect("own element");
            (0..auts.len()).filter(|&i| order.is_multiple_of(aut_orders[i])).collect()
        })
        .collect();
    let total = per_generator
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .unwrap_or(usize::MAX);
    if total > candidate_cap {
        return Err(GroupError::CapExceeded {
            what: "action candidates",
            cap: candidate_cap,
        });
    }
    let mut out = Vec::new();
    for choice in cartesian(&per_generator) {
        let tables: Vec<Vec<u32>> = choice.iter().map(|&i| auts[i].clone()).collect();
        let spec = ActionSpec::from_automorphisms(normal, &tables);
        if spec.automorphism_tables(normal, acting).is_ok() {
            out.push(spec);
        }
    }
    Ok(out)
}

/// A coarse isomorphism invariant: order, the multiset of
/// (element order, centralizer order) pairs, and `|G'|`. Isomorphic groups
/// share it; distinct groups occasionally do too.
pub fn isomorphism_invariant(group: &Group) -> Vec<u64> {
    let n = group.order();
    let mut pairs: Vec<(u64, u64)> = group
        .elements()
        .map(|x| {
            let centralizer = group
                .elements()
                .filter(|&y| group.mul(x, y) == group.mul(y, x))
                .count();
            (
                group.element_order(x).expect("own element") as u64,
                centralizer as u64,
            )
        })
        .collect();
    pairs.sort_unstable();
    let mut key = vec![n as u64, group.derived_subgroup().order() as u64];
    key.extend(pairs.into_iter().flat_map(|(a, b)| [a, b]));
    key
}

/// A group of the library together with the recipe that rebuilt it.
#[derive(Clone, Debug)]
pub struct LibraryGroup {
    pub recipe: Recipe,
    pub group: Group,
}

/// `[N]H` for every normal recipe, acting recipe and valid action, keeping
/// one group per isomorphism invariant. Families whose automorphism search
/// exceeds the cap are skipped.
pub fn build_semidirect_family(normals: &[Recipe], actings: &[Recipe], max_order: usize, limits: Limits) -> Result<Vec<LibraryGroup>> {
    let mut jobs = Vec::new();
    for n in normals {
        for h in actings {
            jobs.push((n.clone(), h.clone()));
        }
    }
    let built: Vec<Result<Vec<LibraryGroup>>> = jobs
        .par_iter()
        .map(|(nr, hr)| {
            let n = nr.build_with_limits(limits)?;
            let h = hr.build_with_limits(limits)?;
            if n.order() * h.order() > max_order {
                return Ok(Vec::new());
            }
            let actions = match enumerate_actions(&n, &h, limits.automorphism_candidate_cap) {
                Ok(a) => a,
                Err(e) if e.is_cap_exceeded() => {
                    info!("skipping {nr}:{hr}: {e}");
                    return Ok(Vec::new());
                }
                Err(e) => return Err(e),
            };
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for (i, spec) in actions.iter().enumerate() {
                let g = Group::semidirect(&n, &h, spec)?.group;
                if seen.insert(isomorphism_invariant(&g)) {
                    out.push(LibraryGroup {
                        recipe: Recipe::semidirect(nr.clone(), hr.clone(), i),
                        group: g,
                    });
                }
            }
            Ok(out)
        })
        .collect();
    let mut out = Vec::new();
    for r in built {
        out.extend(r?);
    }
    Ok(out)
}

/// The recipe library: groups of order at most `max_order` (and at least 2).
pub fn library_recipes(max_order: usize) -> Vec<Recipe> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        out.push(Recipe::Cyclic { n });
    }
    for (p, max_rank) in [(2usize, 4usize), (3, 3), (5, 2), (7, 2)] {
        for rank in 2..=max_rank {
            if p.pow(rank as u32) <= max_order {
                out.push(Recipe::ElementaryAbelian { p, rank });
            }
        }
    }
    for n in 3..=max_order / 2 {
        out.push(Recipe::Dihedral { n });
    }
    for n in 2..=max_order / 4 {
        out.push(Recipe::Dicyclic { n });
    }
    for degree in 3..=5 {
        if factorial(degree) <= max_order {
            out.push(Recipe::Symmetric { degree });
        }
        if factorial(degree) / 2 <= max_order {
            out.push(Recipe::Alternating { degree });
        }
    }
    let blocks = [
        Recipe::Cyclic { n: 2 },
        Recipe::Cyclic { n: 3 },
        Recipe::Cyclic { n: 4 },
        Recipe::Cyclic { n: 5 },
        Recipe::ElementaryAbelian { p: 2, rank: 2 },
        Recipe::ElementaryAbelian { p: 3, rank: 2 },
        Recipe::Symmetric { degree: 3 },
        Recipe::Dihedral { n: 4 },
        Recipe::Dicyclic { n: 2 },
        Recipe::Alternating { degree: 4 },
        Recipe::Dihedral { n: 5 },
        Recipe::Symmetric { degree: 4 },
    ];
    for (i, l) in blocks.iter().enumerate() {
        for r in &blocks[i..] {
            if recipe_order(l) * recipe_order(r) <= max_order {
                out.push(Recipe::direct(l.clone(), r.clone()));
            }
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn recipe_order(r: &Recipe) -> usize {
    match r {
        Recipe::Cyclic { n } => *n,
        Recipe::ElementaryAbelian { p, rank } => p.pow(*rank as u32),
        Recipe::Dihedral { n } => 2 * n,
        Recipe::Dicyclic { n } => 4 * n,
        Recipe::Symmetric { degree } => factorial(*degree),
        Recipe::Alternating { degree } => factorial(*degree) / 2,
        Recipe::Direct { left, right } => recipe_order(left) * recipe_order(right),
        Recipe::Semidirect { normal, acting, .. } => recipe_order(normal) * recipe_order(acting),
        Recipe::Example972 => 972,
        Recipe::Document { .. } => usize::MAX,
    }
}

pub fn semidirect_normals() -> Vec<Recipe> {
    let mut out: Vec<Recipe> = [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17, 19, 25]
        .into_iter()
        .map(Recipe::cyclic)
        .collect();
    out.extend([
        Recipe::ElementaryAbelian { p: 2, rank: 2 },
        Recipe::ElementaryAbelian { p: 2, rank: 3 },
        Recipe::ElementaryAbelian { p: 3, rank: 2 },
        Recipe::ElementaryAbelian { p: 5, rank: 2 },
        Recipe::direct(Recipe::cyclic(4), Recipe::cyclic(2)),
        Recipe::Dihedral { n: 4 },
        Recipe::Dicyclic { n: 2 },
        Recipe::Symmetric { degree: 3 },
    ]);
    out
}

pub fn semidirect_actings() -> Vec<Recipe> {
    let mut out: Vec<Recipe> = [2, 3, 4, 5, 6, 8].into_iter().map(Recipe::cyclic).collect();
    out.push(Recipe::ElementaryAbelian { p: 2, rank: 2 });
    out.push(Recipe::Symmetric { degree: 3 });
    out
}

/// The library groups of order ≤ `max_order`, one per isomorphism invariant,
/// in library order (plain recipes before semidirect families).
pub fn library_groups(max_order: usize, limits: Limits) -> Result<Vec<LibraryGroup>> {
    let plain: Vec<Result<LibraryGroup>> = library_recipes(max_order)
        .into_par_iter()
        .map(|recipe| {
            let group = recipe.build_with_limits(limits)?;
            Ok(LibraryGroup { recipe, group })
        })
        .collect();
    let mut all = Vec::new();
    for g in plain {
        all.push(g?);
    }
    all.extend(build_semidirect_family(
        &semidirect_normals(),
        &semidirect_actings(),
        max_order,
        limits,
    )?);
    let keys: Vec<Vec<u64>> = all.par_iter().map(|g| isomorphism_invariant(&g.group)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (g, key) in all.into_iter().zip(keys) {
        if seen.insert(key) {
            out.push(g);
        }
    }
    debug!("library: {} groups of order <= {max_order}", out.len());
    Ok(out)
}

/// A factorization `G = AB` to check theorems against.
#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub id: String,
    pub recipe: Recipe,
    pub group: Group,
    pub a: Subgroup,
    pub b: Subgroup,
}

impl CorpusInstance {
    /// Rebuilds the group from the recipe and maps `A`, `B` across by words
    /// in the generators.
    pub fn replay(&self) -> Result<CorpusInstance> {
        let group = self.recipe.build_with_limits(self.group.limits())?;
        let carry = |h: &Subgroup| -> Result<Subgroup> {
            let elems = h
                .generators()
                .iter()
                .map(|&x| group.evaluate_word(&self.group.word_of(x)))
                .collect::<Result<Vec<_>>>()?;
            group.generate(&elems)
        };
        Ok(CorpusInstance {
            id: self.id.clone(),
            recipe: self.recipe.clone(),
            a: carry(&self.a)?,
            b: carry(&self.b)?,
            group,
        })
    }
}

/// Factorizations `G = AB` with `A` normal and both factors proper and
/// nontrivial, one `B` per conjugacy class.
pub fn harvest_factorizations(entry: &LibraryGroup) -> Result<Vec<CorpusInstance>> {
    let g = &entry.group;
    let subgroups = g.all_subgroups()?;
    let mut reps = Vec::new();
    let mut claimed = HashSet::new();
    for s in subgroups.iter() {
        if claimed.contains(s.members()) {
            continue;
        }
        // ascending order: the first member of each class is its least element
        for x in g.elements() {
            claimed.insert(g.conjugate_subgroup(s, x).members().clone());
        }
        reps.push(s.clone());
    }
    let filter = FlagFilter {
        a_normal: true,
        proper: true,
        ..FlagFilter::default()
    };
    let found = g.find_factorizations(filter, &SubgroupSource::Candidates(reps))?;
    Ok(found
        .into_iter()
        .enumerate()
        .map(|(i, d)| CorpusInstance {
            id: format!("{}#{:03}", entry.recipe, i),
            recipe: entry.recipe.clone(),
            group: g.clone(),
            a: d.a,
            b: d.b,
        })
        .collect())
}

/// Library groups of order ≤ `max_order`, their harvested factorizations,
/// and the order-972 example.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub groups: Vec<LibraryGroup>,
    pub instances: Vec<CorpusInstance>,
}

pub fn builtin_corpus(max_order: usize, limits: Limits) -> Result<Corpus> {
    let groups = library_groups(max_order, limits)?;
    let harvested: Vec<Result<Vec<CorpusInstance>>> =
        groups.par_iter().map(harvest_factorizations).collect();
    let mut instances = Vec::new();
    for h in harvested {
        instances.extend(h?);
    }
    let example = build_example_972()?;
    instances.push(example.instance());
    instances.sort_by(|x, y| x.id.cmp(&y.id));
    info!(
        "corpus: {} groups, {} instances",
        groups.len(),
        instances.len()
    );
    Ok(Corpus { groups, instances })
}

/// The order-972 group `[A]⟨b⟩` with its named pieces.
#[derive(Clone, Debug)]
pub struct Example972 {
    pub group: Group,
    /// Class-2 group of order 243 and exponent 3.
    pub a: Subgroup,
    /// `⟨b⟩ ≅ C4`
    pub q: Subgroup,
    /// `⟨g4, g5⟩`
    pub a0: Subgroup,
    /// `A0⟨b⟩`, order 36.
    pub b: Subgroup,
    /// Generators by name: g2, g4, g5, g6, g7, b.
    pub named: BTreeMap<String, Elem>,
}

impl Example972 {
    pub fn instance(&self) -> CorpusInstance {
        CorpusInstance {
            id: "Example972".into(),
            recipe: Recipe::Example972,
            group: self.group.clone(),
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    pub fn elem(&self, name: &str) -> Elem {
        self.named[name]
    }
}

const EXAMPLE_NAMES: [&str; 5] = ["g2", "g4", "g5", "g6", "g7"];

fn exponent_vector(entries: &[(usize, u8)]) -> Vec<u8> {
    let mut v = vec![0u8; EXAMPLE_NAMES.len()];
    for &(i, e) in entries {
        v[i] = e;
    }
    v
}

/// Builds the order-972 example and checks every defining relation.
pub fn build_example_972() -> Result<Example972> {
    let invalid = |msg: String| GroupError::ConstructionInvalid(msg);
    // positions: g2 = 0, g4 = 1, g5 = 2, g6 = 3, g7 = 4
    let collector = ClassTwoCollector::new(
        3,
        5,
        vec![
            CommutatorRelation {
                later: 1,
                earlier: 0,
                value: exponent_vector(&[(3, 1)]),
            },
            CommutatorRelation {
                later: 2,
                earlier: 0,
                value: exponent_vector(&[(4, 1)]),
            },
        ],
    )?;
    let normal = collector.build(
        EXAMPLE_NAMES.iter().map(|s| s.to_string()).collect(),
        Limits::global(),
    )?;
    if normal.order() != 243 {
        return Err(invalid(format!("|A| = {}, expected 243", normal.order())));
    }
    let g = |name: &str| normal.generator_by_name(name).expect("declared");
    let word = |parts: &[(&str, i64)]| {
        parts
            .iter()
            .fold(normal.identity(), |acc, &(n, e)| normal.mul(acc, normal.pow(g(n), e)))
    };
    for name in EXAMPLE_NAMES {
        if normal.pow(g(name), 3) != normal.identity() {
            return Err(invalid(format!("{name}^3 != 1")));
        }
    }
    let conjugation_relations: [(&str, &str, Elem); 10] = [
        ("g4", "g2", word(&[("g4", 1), ("g6", 1)])),
        ("g5", "g2", word(&[("g5", 1), ("g7", 1)])),
        ("g6", "g2", g("g6")),
        ("g7", "g2", g("g7")),
        ("g5", "g4", g("g5")),
        ("g6", "g4", g("g6")),
        ("g7", "g4", g("g7")),
        ("g6", "g5", g("g6")),
        ("g7", "g5", g("g7")),
        ("g7", "g6", g("g7")),
    ];
    for (x, y, expected) in conjugation_relations {
        if normal.conjugate(g(x), g(y)) != expected {
            return Err(invalid(format!("relation {x}^{y} fails")));
        }
    }

    let images = vec![
        g("g2"),
        word(&[("g4", 1), ("g5", 1)]),
        word(&[("g4", 1), ("g5", 2)]),
        word(&[("g6", 1), ("g7", 1)]),
        word(&[("g6", 1), ("g7", 2)]),
    ];
    let aut = extend_to_automorphism(&normal, &images)
        .ok_or_else(|| invalid("the b-map is not an automorphism of A".into()))?;
    if automorphism_order(&aut) != 4 {
        return Err(invalid(format!(
            "the b-map has order {}, expected 4",
            automorphism_order(&aut)
        )));
    }

    let acting = perm_group(4, vec![vec![1, 2, 3, 0]], &["b"], Limits::global())?;
    let product = Group::semidirect(&normal, &acting, &ActionSpec::new(vec![images.clone()]))?;
    let group = product.group.clone();
    if group.order() != 972 {
        return Err(invalid(format!("|G| = {}, expected 972", group.order())));
    }
    let mut named = BTreeMap::new();
    for name in EXAMPLE_NAMES.iter().chain(&["b"]) {
        named.insert(name.to_string(), group.generator_by_name(name).expect("declared"));
    }
    let b_elem = named["b"];
    for (i, name) in EXAMPLE_NAMES.iter().enumerate() {
        let expected = product.embed_normal(images[i]);
        if group.conjugate(named[*name], b_elem) != expected {
            return Err(invalid(format!("relation {name}^b fails in G")));
        }
    }
    let a0 = group.generate(&[named["g4"], named["g5"]])?;
    let b = group.extend(&a0, &[b_elem])?;
    if b.order() != 36 {
        return Err(invalid(format!("|B| = {}, expected 36", b.order())));
    }
    Ok(Example972 {
        group,
        a: product.normal,
        q: product.complement,
        a0,
        b,
        named,
    })
}

/// One structural check on the order-972 example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatteryCheck {
    pub name: &'static str,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

fn check(name: &'static str, expected: impl fmt::Display, observed: impl fmt::Display) -> BatteryCheck {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    BatteryCheck {
        name,
        pass: expected == observed,
        expected,
        observed,
    }
}

/// The structural facts of the example, each computed from primitives.
pub fn example_972_battery(ex: &Example972) -> Result<Vec<BatteryCheck>> {
    let g = &ex.group;
    let e = |n: &str| ex.elem(n);
    let mut out = Vec::new();
    out.push(check("order of G", 972, g.order()));
    out.push(check("order of A", 243, ex.a.order()));
    out.push(check("order of B", 36, ex.b.order()));

    let g67 = g.generate(&[e("g6"), e("g7")])?;
    let a_derived = g.commutator_subgroup(&ex.a, &ex.a)?;
    let a_frattini = g.p_group_frattini(&ex.a)?;
    out.push(check("A' = <g6, g7>", true, a_derived == g67));
    out.push(check("Phi(A) = <g6, g7>", true, a_frattini == g67));
    out.push(check("order of A'", 9, a_derived.order()));

    let maximals = g.maximal_subgroups_of_p_group(&ex.a)?;
    out.push(check("maximal subgroups of A", 13, maximals.len()));
    let mut permuting = 0;
    for m in &maximals {
        if g.permutes(m, &ex.b)? {
            permuting += 1;
        }
    }
    out.push(check("maximal subgroups of A permuting with B", 13, permuting));

    let a0_normal_in_a = g.is_normalized_by(&ex.a0, &ex.a)?;
    out.push(check("A0 normal in A", false, a0_normal_in_a));
    out.push(check("A0 normalized by Q", true, g.is_normalized_by(&ex.a0, &ex.q)?));
    out.push(check("order of Core_G(B)", 1, g.core(&ex.b)?.order()));

    let derived = g.derived_subgroup();
    let g4567 = g.generate(&[e("g4"), e("g5"), e("g6"), e("g7")])?;
    out.push(check("G' = <g4, g5, g6, g7>", true, derived == g4567));
    out.push(check(
        "G' nilpotent",
        true,
        g.subgroup_is_member(&derived, Formation::Nilpotent)?,
    ));
    let derived_elementary = derived
        .elements()
        .all(|x| g.pow(x, 3) == g.identity())
        && g.commutator_subgroup(&derived, &derived)?.is_trivial();
    out.push(check("G' elementary abelian", true, derived_elementary));

    let residual = g.residual(Formation::Supersoluble)?;
    out.push(check("supersoluble residual of G = <g4, g5, g6, g7>", true, residual == g4567));
    out.push(check("order of supersoluble residual of G", 81, residual.order()));
    let quotient = g.quotient(&residual)?.group;
    out.push(check(
        "G / residual cyclic of order 12",
        true,
        quotient.is_cyclic_of_order(12),
    ));

    let ra = g.subgroup_residual(&ex.a, Formation::Supersoluble)?;
    let rb = g.subgroup_residual(&ex.b, Formation::Supersoluble)?;
    out.push(check("order of supersoluble residual of A", 1, ra.order()));
    out.push(check("supersoluble residual of B = A0", true, rb == ex.a0));
    let product_size = g.product_size(&ra, &rb)?;
    out.push(check("order of A-residual times B-residual", 9, product_size));
    out.push(check(
        "residual of G differs from product of residuals",
        true,
        product_size != residual.order(),
    ));

    let d = g.classify(&ex.a, &ex.b)?;
    out.push(check("weak normal product", true, d.flags.weak_normal));
    out.push(check("weak direct product", false, d.flags.weak_direct));
    out.push(check("Sylow-wise permutability hypothesis", false, d.flags.sylow_wise_permutes));
    let witness_found = d
        .theorem_d_witness
        .as_ref()
        .map(|w| !g.permutes(&w.left, &w.right).unwrap_or(true))
        .unwrap_or(false);
    out.push(check("non-permuting witness pair confirmed", true, witness_found));
    Ok(out)
}

//! Per-instance theorem checks and the corpus runner.
//!
//! Every check evaluates all hypothesis clauses (even after one fails) and
//! recomputes its conclusion from group primitives.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corpus::CorpusInstance;
use crate::error::{GroupError, Result};
use crate::formations::Formation;
use crate::group::{Group, Subgroup};
use crate::products::ProductDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    A,
    CorA,
    B,
    C,
    CorB,
    D,
    CorC,
    CorD,
    Prop42,
    Lem21,
    Baer,
    /// The residual identity for weak normal products with nilpotent `G'`,
    /// without the Sylow-wise clause. Known to fail; failures are near misses.
    NaiveD,
    /// Residual identity for mutually permutable products of supersoluble
    /// groups; a published result checked here but not proved in this crate.
    Monakhov,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::A,
        TheoremId::CorA,
        TheoremId::B,
        TheoremId::C,
        TheoremId::CorB,
        TheoremId::D,
        TheoremId::CorC,
        TheoremId::CorD,
        TheoremId::Prop42,
        TheoremId::Lem21,
        TheoremId::Baer,
        TheoremId::NaiveD,
        TheoremId::Monakhov,
    ];

    /// Checks whose counterexamples break the build.
    pub const STRICT: [TheoremId; 11] = [
        TheoremId::A,
        TheoremId::CorA,
        TheoremId::B,
        TheoremId::C,
        TheoremId::CorB,
        TheoremId::D,
        TheoremId::CorC,
        TheoremId::CorD,
        TheoremId::Prop42,
        TheoremId::Lem21,
        TheoremId::Baer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::A => "A",
            TheoremId::CorA => "CorA",
            TheoremId::B => "B",
            TheoremId::C => "C",
            TheoremId::CorB => "CorB",
            TheoremId::D => "D",
            TheoremId::CorC => "CorC",
            TheoremId::CorD => "CorD",
            TheoremId::Prop42 => "Prop42",
            TheoremId::Lem21 => "Lem21",
            TheoremId::Baer => "Baer",
            TheoremId::NaiveD => "NaiveD",
            TheoremId::Monakhov => "Monakhov",
        }
    }

    /// The check mirrors a result proved elsewhere.
    pub fn is_external(self) -> bool {
        self == TheoremId::Monakhov
    }

    /// A false conclusion is expected behaviour, not a counterexample.
    pub fn is_near_miss_check(self) -> bool {
        self == TheoremId::NaiveD
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    HypothesesFail,
    Verified,
    Counterexample,
    NearMiss,
    Errored,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HypothesesFail => "HYPOTHESES_FAIL",
            Verdict::Verified => "VERIFIED",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::NearMiss => "NEAR_MISS",
            Verdict::Errored => "ERRORED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub instance_id: String,
    pub hypotheses_hold: bool,
    pub clauses: Vec<Clause>,
    /// Present exactly when the hypotheses hold.
    pub conclusion_holds: Option<bool>,
    pub witness: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub runtime_ms: f64,
}

/// `{ "order": n, "generators": [words] }`
pub fn describe_subgroup(group: &Group, h: &Subgroup) -> Value {
    let gens: Vec<String> = h.generators().iter().map(|&x| group.format_word(x)).collect();
    json!({ "order": h.order(), "generators": gens })
}

/// Facts about an instance shared by every check. Only hypothesis data lives
/// here; conclusions are recomputed inside each check.
pub struct InstanceContext<'a> {
    pub instance: &'a CorpusInstance,
    pub decomposition: ProductDecomposition,
    pub a_supersoluble: bool,
    pub b_supersoluble: bool,
    pub a_w_supersoluble: bool,
    pub b_w_supersoluble: bool,
}

impl<'a> InstanceContext<'a> {
    pub fn new(instance: &'a CorpusInstance) -> Result<Self> {
        let g = &instance.group;
        Ok(InstanceContext {
            decomposition: g.classify(&instance.a, &instance.b)?,
            a_supersoluble: g.subgroup_is_member(&instance.a, Formation::Supersoluble)?,
            b_supersoluble: g.subgroup_is_member(&instance.b, Formation::Supersoluble)?,
            a_w_supersoluble: g.subgroup_is_member(&instance.a, Formation::WSupersoluble)?,
            b_w_supersoluble: g.subgroup_is_member(&instance.b, Formation::WSupersoluble)?,
            instance,
        })
    }

    fn group(&self) -> &Group {
        &self.instance.group
    }

    fn factors_in(&self, f: Formation) -> (bool, bool) {
        match f {
            Formation::Supersoluble => (self.a_supersoluble, self.b_supersoluble),
            Formation::WSupersoluble => (self.a_w_supersoluble, self.b_w_supersoluble),
            Formation::Nilpotent => unreachable!("no check takes nilpotent factors"),
        }
    }
}

struct Outcome {
    clauses: Vec<Clause>,
    conclusion: Option<bool>,
    witness: BTreeMap<String, Value>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            clauses: Vec::new(),
            conclusion: None,
            witness: BTreeMap::new(),
        }
    }

    fn clause(&mut self, name: &str, holds: bool) {
        self.clauses.push(Clause {
            name: name.into(),
            holds,
        });
    }

    fn hypotheses_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    fn witness(&mut self, key: &str, value: Value) {
        self.witness.insert(key.into(), value);
    }
}

fn pair_witness(group: &Group, pair: &crate::products::NonPermutingPair) -> Value {
    json!({
        "left": describe_subgroup(group, &pair.left),
        "right": describe_subgroup(group, &pair.right),
    })
}

fn add_product_witnesses(out: &mut Outcome, ctx: &InstanceContext) {
    let g = ctx.group();
    let d = &ctx.decomposition;
    if let Some(w) = &d.weak_normal_witness {
        out.witness("maximal_subgroup_not_permuting_with_b", pair_witness(g, w));
    }
    if d.sylow_readings_differ {
        out.witness("sylow_readings_differ", json!(true));
    }
}

/// `G^F` against `A^F·B^F` as member sets; records the three orders.
fn residual_identity(out: &mut Outcome, ctx: &InstanceContext, f: Formation) -> Result<bool> {
    let g = ctx.group();
    let inst = ctx.instance;
    let rg = g.residual(f)?;
    let ra = g.subgroup_residual(&inst.a, f)?;
    let rb = g.subgroup_residual(&inst.b, f)?;
    let product = g.product_set(&ra, &rb)?;
    let holds = &product == rg.members();
    let tag = f.short_name();
    out.witness(&format!("{tag}_residual_g"), describe_subgroup(g, &rg));
    out.witness(&format!("{tag}_residual_a"), describe_subgroup(g, &ra));
    out.witness(&format!("{tag}_residual_b"), describe_subgroup(g, &rb));
    out.witness(&format!("{tag}_residual_product_order"), json!(product.count_ones(..)));
    Ok(holds)
}

fn check_membership_theorem(ctx: &InstanceContext, f: Formation) -> Result<Outcome> {
    let mut out = Outcome::new();
    let (a_in, b_in) = ctx.factors_in(f);
    out.clause("weak_direct", ctx.decomposition.flags.weak_direct);
    out.clause(&format!("a_in_{}", f.short_name()), a_in);
    out.clause(&format!("b_in_{}", f.short_name()), b_in);
    add_product_witnesses(&mut out, ctx);
    if out.hypotheses_hold() {
        out.conclusion = Some(ctx.group().is_member(f)?);
    }
    Ok(out)
}

fn check_b(ctx: &InstanceContext) -> Result<Outcome> {
    let mut out = Outcome::new();
    out.clause("weak_direct", ctx.decomposition.flags.weak_direct);
    add_product_witnesses(&mut out, ctx);
    if out.hypotheses_hold() {
        let u = residual_identity(&mut out, ctx, Formation::Supersoluble)?;
        let wu = residual_identity(&mut out, ctx, Formation::WSupersoluble)?;
        out.conclusion = Some(u && wu);
    }
    Ok(out)
}

fn check_c(ctx: &InstanceContext, f: Formation) -> Result<Outcome> {
    let mut out = Outcome::new();
    let flags = &ctx.decomposition.flags;
    let (a_in, b_in) = ctx.factors_in(f);
    out.clause("weak_normal", flags.weak_normal);
    out.clause("g_prime_nilpotent", flags.g_prime_nilpotent);
    out.clause(&format!("a_in_{}", f.short_name()), a_in);
    out.clause(&format!("b_in_{}", f.short_name()), b_in);
    add_product_witnesses(&mut out, ctx);
    if out.hypotheses_hold() {
        out.conclusion = Some(ctx.group().is_member(f)?);
    }
    Ok(out)
}

fn check_d(ctx: &InstanceContext, f: Formation) -> Result<Outcome> {
    let mut out = Outcome::new();
    let flags = &ctx.decomposition.flags;
    out.clause("a_normal", flags.a_normal);
    out.clause("is_product", flags.is_product);
    out.clause("sylow_wise_permutes", flags.sylow_wise_permutes);
    out.clause("g_prime_nilpotent", flags.g_prime_nilpotent);
    if let Some(w) = &ctx.decomposition.theorem_d_witness {
        out.witness("sylow_of_b_not_permuting", pair_witness(ctx.group(), w));
    }
    if out.hypotheses_hold() {
        out.conclusion = Some(residual_identity(&mut out, ctx, f)?);
    }
    Ok(out)
}

fn check_naive_d(ctx: &InstanceContext) -> Result<Outcome> {
    let mut out = Outcome::new();
    let flags = &ctx.decomposition.flags;
    out.clause("weak_normal", flags.weak_normal);
    out.clause("g_prime_nilpotent", flags.g_prime_nilpotent);
    if let Some(w) = &ctx.decomposition.theorem_d_witness {
        out.witness("sylow_of_b_not_permuting", pair_witness(ctx.group(), w));
    }
    if out.hypotheses_hold() {
        out.conclusion = Some(residual_identity(&mut out, ctx, Formation::Supersoluble)?);
    }
    Ok(out)
}

/// `G^𝔘`, `(G')^𝔑` and `[A,B]^𝔑` coincide.
fn three_residuals(out: &mut Outcome, ctx: &InstanceContext) -> Result<bool> {
    let g = ctx.group();
    let inst = ctx.instance;
    let ru = g.residual(Formation::Supersoluble)?;
    let derived = g.derived_subgroup();
    let rd = g.subgroup_residual(&derived, Formation::Nilpotent)?;
    let ab = g.commutator_subgroup(&inst.a, &inst.b)?;
    let rab = g.subgroup_residual(&ab, Formation::Nilpotent)?;
    out.witness("u_residual_g", describe_subgroup(g, &ru));
    out.witness("n_residual_derived", describe_subgroup(g, &rd));
    out.witness("n_residual_commutator_ab", describe_subgroup(g, &rab));
    Ok(ru == rd && rd == rab)
}

fn check_cor_d(ctx: &InstanceContext) -> Result<Outcome> {
    let mut out = Outcome::new();
    out.clause("weak_normal", ctx.decomposition.flags.weak_normal);
    out.clause("a_in_u", ctx.a_supersoluble);
    out.clause("b_in_u", ctx.b_supersoluble);
    add_product_witnesses(&mut out, ctx);
    if out.hypotheses_hold() {
        out.conclusion = Some(three_residuals(&mut out, ctx)?);
    }
    Ok(out)
}

fn check_monakhov(ctx: &InstanceContext) -> Result<Outcome> {
    let mut out = Outcome::new();
    let mutual = ctx.decomposition.flags.mutually_permutable;
    out.clause("is_product", ctx.decomposition.flags.is_product);
    out.clause("mutual_permutability_evaluated", mutual.is_some());
    out.clause("mutually_permutable", mutual == Some(true));
    out.clause("a_in_u", ctx.a_supersoluble);
    out.clause("b_in_u", ctx.b_supersoluble);
    if let Some(w) = &ctx.decomposition.mutual_witness {
        out.witness("non_permuting_pair", pair_witness(ctx.group(), w));
    }
    if out.hypotheses_hold() {
        out.conclusion = Some(three_residuals(&mut out, ctx)?);
    }
    Ok(out)
}

fn check_prop42(ctx: &InstanceContext) -> Result<Outcome> {
    let mut out = Outcome::new();
    out.clause("weak_normal", ctx.decomposition.flags.weak_normal);
    out.clause("a_in_u", ctx.a_supersoluble);
    out.clause("b_in_u", ctx.b_supersoluble);
    add_product_witnesses(&mut out, ctx);
    if out.hypotheses_hold() {
        let g = ctx.group();
        let b_derived = g.commutator_subgroup(&ctx.instance.b, &ctx.instance.b)?;
        out.witness("derived_b", describe_subgroup(g, &b_derived));
        out.conclusion = Some(g.is_subnormal(&b_derived)?);
    }
    Ok(out)
}

fn check_baer(ctx: &InstanceContext) -> Result<Outcome> {
    let mut out = Outcome::new();
    let g = ctx.group();
    let flags = &ctx.decomposition.flags;
    out.clause("a_normal", flags.a_normal);
    out.clause("b_normal", g.is_normal(&ctx.instance.b)?);
    out.clause("is_product", flags.is_product);
    out.clause("g_prime_nilpotent", flags.g_prime_nilpotent);
    out.clause("a_in_u", ctx.a_supersoluble);
    out.clause("b_in_u", ctx.b_supersoluble);
    if out.hypotheses_hold() {
        out.conclusion = Some(g.is_supersoluble()?);
    }
    Ok(out)
}

/// Quotients by normal subgroups inside a factor, and restrictions of `B`
/// to its subgroups, stay weak direct.
fn check_lem21(ctx: &InstanceContext) -> Result<Outcome> {
    let mut out = Outcome::new();
    out.clause("weak_direct", ctx.decomposition.flags.weak_direct);
    if !out.hypotheses_hold() {
        return Ok(out);
    }
    let (quotient_ok, restriction_ok) = weak_direct_closure(&mut out, ctx.group(), &ctx.instance.a, &ctx.instance.b)?;
    out.conclusion = Some(quotient_ok && restriction_ok);
    Ok(out)
}

/// The number of quotient and restriction derivatives checked, and a
/// description of the violations if any derivative is not weak direct.
pub fn weak_direct_closure_counts(g: &Group, a: &Subgroup, b: &Subgroup) -> Result<(usize, Option<String>)> {
    let mut out = Outcome::new();
    let (q, r) = weak_direct_closure(&mut out, g, a, b)?;
    let checked = out.witness.get("derivatives_checked").and_then(Value::as_u64).unwrap_or(0) as usize;
    let violation = if q && r {
        None
    } else {
        Some(
            out.witness
                .iter()
                .filter(|(k, _)| k.starts_with("violation"))
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("; "),
        )
    };
    Ok((checked, violation))
}

/// Returns `(quotient part holds, restriction part holds)`.
fn weak_direct_closure(out: &mut Outcome, g: &Group, a: &Subgroup, b: &Subgroup) -> Result<(bool, bool)> {
    let mut checked = 0u64;
    let mut quotient_ok = true;
    for n in g.normal_subgroups()?.nodes() {
        if !(n.is_subgroup_of(a) || n.is_subgroup_of(b)) {
            continue;
        }
        let q = g.quotient(n)?;
        let d = q.group.classify(&q.image(a)?, &q.image(b)?)?;
        checked += 1;
        if !d.flags.weak_direct && quotient_ok {
            quotient_ok = false;
            out.witness("violation_quotient_by", describe_subgroup(g, n));
        }
    }
    let mut restriction_ok = true;
    let b_induced = g.induced(b)?;
    for k in b_induced.group.all_subgroups()?.iter() {
        let k = b_induced.lift(g, k)?;
        let ak = g.join(a, &k)?;
        let span = g.induced(&ak)?;
        let d = span.group.classify(&span.restrict(a)?, &span.restrict(&k)?)?;
        checked += 1;
        if !d.flags.weak_direct && restriction_ok {
            restriction_ok = false;
            out.witness("violation_restriction_to", describe_subgroup(g, &k));
        }
    }
    out.witness("derivatives_checked", json!(checked));
    Ok((quotient_ok, restriction_ok))
}

/// Runs one check on a prepared instance.
pub fn check(theorem: TheoremId, ctx: &InstanceContext) -> Result<TheoremReport> {
    let start = Instant::now();
    let out = match theorem {
        TheoremId::A => check_membership_theorem(ctx, Formation::Supersoluble)?,
        TheoremId::CorA => check_membership_theorem(ctx, Formation::WSupersoluble)?,
        TheoremId::B => check_b(ctx)?,
        TheoremId::C => check_c(ctx, Formation::Supersoluble)?,
        TheoremId::CorB => check_c(ctx, Formation::WSupersoluble)?,
        TheoremId::D => check_d(ctx, Formation::Supersoluble)?,
        TheoremId::CorC => check_d(ctx, Formation::WSupersoluble)?,
        TheoremId::CorD => check_cor_d(ctx)?,
        TheoremId::Prop42 => check_prop42(ctx)?,
        TheoremId::Lem21 => check_lem21(ctx)?,
        TheoremId::Baer => check_baer(ctx)?,
        TheoremId::NaiveD => check_naive_d(ctx)?,
        TheoremId::Monakhov => check_monakhov(ctx)?,
    };
    let hypotheses_hold = out.hypotheses_hold();
    let verdict = match (hypotheses_hold, out.conclusion) {
        (false, _) => Verdict::HypothesesFail,
        (true, Some(true)) => Verdict::Verified,
        (true, _) if theorem.is_near_miss_check() => Verdict::NearMiss,
        (true, _) => Verdict::Counterexample,
    };
    Ok(TheoremReport {
        theorem_id: theorem,
        instance_id: ctx.instance.id.clone(),
        hypotheses_hold,
        clauses: out.clauses,
        conclusion_holds: if hypotheses_hold { out.conclusion } else { None },
        witness: out.witness,
        verdict,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs one check on a bare instance.
pub fn check_instance(theorem: TheoremId, instance: &CorpusInstance) -> Result<TheoremReport> {
    check(theorem, &InstanceContext::new(instance)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub reports: usize,
    pub hypotheses_satisfied: usize,
    pub verified: usize,
    pub counterexamples: usize,
    pub near_misses: usize,
    pub errored: usize,
}

impl Counts {
    fn add(&mut self, r: &TheoremReport) {
        self.reports += 1;
        match r.verdict {
            Verdict::HypothesesFail => {}
            Verdict::Verified => {
                self.hypotheses_satisfied += 1;
                self.verified += 1;
            }
            Verdict::Counterexample => {
                self.hypotheses_satisfied += 1;
                self.counterexamples += 1;
            }
            Verdict::NearMiss => {
                self.hypotheses_satisfied += 1;
                self.near_misses += 1;
            }
            Verdict::Errored => self.errored += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub totals: Counts,
    pub per_theorem: BTreeMap<String, Counts>,
}

impl Summary {
    pub fn from_reports(instances: usize, reports: &[TheoremReport]) -> Summary {
        let mut s = Summary {
            instances,
            ..Summary::default()
        };
        for r in reports {
            s.totals.add(r);
            s.per_theorem
                .entry(r.theorem_id.to_string())
                .or_default()
                .add(r);
        }
        s
    }

    /// Counterexamples to checks other than the external one.
    pub fn strict_counterexamples(&self) -> usize {
        self.per_theorem
            .iter()
            .filter(|(id, _)| id.parse::<TheoremId>().map(|t| !t.is_external()).unwrap_or(true))
            .map(|(_, c)| c.counterexamples)
            .sum()
    }
}

fn errored_report(theorem: TheoremId, instance_id: &str, err: &GroupError) -> TheoremReport {
    let mut witness = BTreeMap::new();
    witness.insert("error".to_string(), json!(err.to_string()));
    TheoremReport {
        theorem_id: theorem,
        instance_id: instance_id.to_string(),
        hypotheses_hold: false,
        clauses: Vec::new(),
        conclusion_holds: None,
        witness,
        verdict: Verdict::Errored,
        runtime_ms: 0.0,
    }
}

/// Runs `theorems` over every instance in parallel. Errors are kept as
/// `Errored` reports. Reports come back sorted by (theorem id, instance id).
pub fn run_corpus(instances: &[CorpusInstance], theorems: &[TheoremId]) -> (Vec<TheoremReport>, Summary) {
    let mut reports: Vec<TheoremReport> = instances
        .par_iter()
        .flat_map_iter(|inst| {
            let ctx = InstanceContext::new(inst);
            theorems
                .iter()
                .map(|&t| match &ctx {
                    Ok(ctx) => check(t, ctx).unwrap_or_else(|e| errored_report(t, &inst.id, &e)),
                    Err(e) => errored_report(t, &inst.id, e),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    reports.sort_by(|x, y| {
        (x.theorem_id.as_str(), &x.instance_id).cmp(&(y.theorem_id.as_str(), &y.instance_id))
    });
    let summary = Summary::from_reports(instances.len(), &reports);
    (reports, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Recipe;

    fn instance(recipe: Recipe, a_order: usize, b_order: usize) -> CorpusInstance {
        let g = recipe.build().unwrap();
        let subgroups = g.all_subgroups().unwrap();
        let a = subgroups
            .iter()
            .find(|h| h.order() == a_order && g.is_normal(h).unwrap())
            .unwrap()
            .clone();
        let b = subgroups.iter().find(|h| h.order() == b_order).unwrap().clone();
        CorpusInstance {
            id: recipe.to_string(),
            recipe,
            group: g,
            a,
            b,
        }
    }

    #[test]
    fn s3_passes_theorem_a() {
        let inst = instance(Recipe::Symmetric { degree: 3 }, 3, 2);
        let r = check_instance(TheoremId::A, &inst).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert_eq!(r.clauses.len(), 3);
    }

    #[test]
    fn a4_fails_cor_a_hypotheses() {
        let inst = instance(Recipe::Alternating { degree: 4 }, 4, 3);
        let r = check_instance(TheoremId::CorA, &inst).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesFail);
        assert!(r.conclusion_holds.is_none());
        let failing: Vec<&str> = r.clauses.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
        assert_eq!(failing, ["weak_direct"]);
        assert!(r.witness.contains_key("maximal_subgroup_not_permuting_with_b"));
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
    }

    #[test]
    fn empty_corpus_summary() {
        let (reports, summary) = run_corpus(&[], &TheoremId::ALL);
        assert!(reports.is_empty());
        assert_eq!(summary.totals, Counts::default());
        assert_eq!(summary.instances, 0);
    }

    #[test]
    fn s3_weak_direct_closure() {
        let inst = instance(Recipe::Symmetric { degree: 3 }, 3, 2);
        let r = check_instance(TheoremId::Lem21, &inst).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        // quotients by 1 and C3, restrictions to 1 and C2
        assert_eq!(r.witness["derivatives_checked"], json!(4));
    }
}

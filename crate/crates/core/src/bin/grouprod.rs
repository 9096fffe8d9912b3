use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grouprod::corpus::{
    build_example_972, builtin_corpus, example_972_battery, harvest_factorizations, library_groups, CorpusInstance,
    Recipe,
};
use grouprod::formations::Formation;
use grouprod::io::{emit_reports, emit_summary, EmitOptions, GroupDocument, LoadedGroup, ReportFormat, ResultCache};
use grouprod::products::NonPermutingPair;
use grouprod::verifier::{describe_subgroup, run_corpus, Summary, TheoremId, TheoremReport, Verdict};
use grouprod::{Group, GroupError, Limits, Subgroup};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "grouprod", version, about = "Weak normal and weak direct products of finite groups")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Human => ReportFormat::Human,
            FormatArg::Machine => ReportFormat::Machine,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ReportSelection {
    /// Counterexamples, near misses and errors only.
    Failures,
    /// Every report whose hypotheses hold, plus failures.
    Satisfied,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the product of two named subgroups.
    Classify {
        file: PathBuf,
        #[arg(long = "a", value_name = "NAME")]
        a: String,
        #[arg(long = "b", value_name = "NAME")]
        b: String,
    },
    /// Compute a formation residual.
    Residual {
        file: PathBuf,
        #[arg(long, default_value = "u")]
        formation: Formation,
        /// Residual of this named subgroup instead of the whole group.
        #[arg(long, value_name = "NAME")]
        subgroup: Option<String>,
    },
    /// Check theorem statements over a corpus.
    Verify {
        /// Theorem id, or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// A directory of group files, or `builtin`.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        /// Largest library group in the builtin corpus.
        #[arg(long, default_value_t = 100)]
        max_order: usize,
        /// Which per-instance reports to print before the summary.
        #[arg(long, value_enum, default_value_t = ReportSelection::Failures)]
        reports: ReportSelection,
    },
    /// Build the order-972 example and run its structural battery.
    Example972,
    /// Write the builtin corpus as group files.
    GenerateCorpus {
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
        #[arg(long, default_value_t = 100)]
        max_order: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure {
            code: if e.is_cap_exceeded() { EXIT_CAP } else { EXIT_USAGE },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

struct Context {
    format: ReportFormat,
    timings: bool,
    cache: ResultCache,
    limits: Limits,
}

impl Context {
    fn emit(&self) -> EmitOptions {
        EmitOptions {
            format: self.format,
            timings: self.timings,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("grouprod: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let g = cli.global;
    let mut limits = Limits::default();
    if let Some(cap) = g.cap {
        limits.enumeration_cap = cap;
    }
    Limits::set_global(limits);
    if let Some(jobs) = g.jobs {
        if jobs == 0 {
            return Err(usage("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    let ctx = Context {
        format: g.format.into(),
        timings: g.timings,
        cache: if g.no_cache { ResultCache::disabled() } else { ResultCache::from_env() },
        limits,
    };
    match cli.command {
        Command::Classify { file, a, b } => classify(&ctx, &file, &a, &b),
        Command::Residual {
            file,
            formation,
            subgroup,
        } => residual(&ctx, &file, formation, subgroup.as_deref()),
        Command::Verify {
            theorem,
            corpus,
            max_order,
            reports,
        } => verify(&ctx, &theorem, &corpus, max_order, reports),
        Command::Example972 => example972(&ctx),
        Command::GenerateCorpus { out, max_order } => generate_corpus(&ctx, &out, max_order),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path, text: &str, limits: Limits) -> Result<LoadedGroup, Failure> {
    grouprod::io::parse_document(text)
        .and_then(|d| d.build_with_limits(limits))
        .map_err(|e| {
            let mut f = Failure::from(e);
            f.message = format!("{}: {}", path.display(), f.message);
            f
        })
}

fn pair_json(g: &Group, w: &Option<NonPermutingPair>) -> Value {
    match w {
        Some(p) => json!({"left": describe_subgroup(g, &p.left), "right": describe_subgroup(g, &p.right)}),
        None => Value::Null,
    }
}

fn classify(ctx: &Context, file: &Path, a: &str, b: &str) -> Result<u8, Failure> {
    let text = read_text(file)?;
    let key = ResultCache::key(&text, "classify", &format!("{a}\u{0}{b}\u{0}{}", ctx.limits.enumeration_cap));
    let record = ctx.cache.get_or_compute(&key, || -> Result<Value, Failure> {
        let loaded = load(file, &text, ctx.limits)?;
        let g = &loaded.group;
        let d = g.classify(loaded.subgroup(a)?, loaded.subgroup(b)?)?;
        Ok(json!({
            "group_order": g.order(),
            "a": describe_subgroup(g, &d.a),
            "b": describe_subgroup(g, &d.b),
            "flags": d.flags,
            "weak_normal_witness": pair_json(g, &d.weak_normal_witness),
            "theorem_d_witness": pair_json(g, &d.theorem_d_witness),
            "mutual_witness": pair_json(g, &d.mutual_witness),
            "sylow_readings_differ": d.sylow_readings_differ,
        }))
    })?;
    match ctx.format {
        ReportFormat::Machine => println!("{record}"),
        ReportFormat::Human => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "|G| = {}  |A| = {}  |B| = {}",
                record["group_order"], record["a"]["order"], record["b"]["order"]
            );
            if let Some(flags) = record["flags"].as_object() {
                for (name, v) in flags {
                    let shown = match v {
                        Value::Bool(true) => "yes",
                        Value::Bool(false) => "no",
                        _ => "unknown",
                    };
                    let _ = writeln!(out, "  {name:<26} {shown}");
                }
            }
            for w in ["weak_normal_witness", "theorem_d_witness", "mutual_witness"] {
                if !record[w].is_null() {
                    let _ = writeln!(out, "{w}: {} does not permute with {}", record[w]["left"], record[w]["right"]);
                }
            }
            print!("{out}");
        }
    }
    Ok(0)
}

fn residual(ctx: &Context, file: &Path, f: Formation, subgroup: Option<&str>) -> Result<u8, Failure> {
    let text = read_text(file)?;
    let params = format!("{}\u{0}{}\u{0}{}", f.short_name(), subgroup.unwrap_or(""), ctx.limits.enumeration_cap);
    let key = ResultCache::key(&text, "residual", &params);
    let record = ctx.cache.get_or_compute(&key, || -> Result<Value, Failure> {
        let loaded = load(file, &text, ctx.limits)?;
        let g = &loaded.group;
        let (host, r) = match subgroup {
            Some(name) => {
                let h = loaded.subgroup(name)?;
                (h.clone(), g.subgroup_residual(h, f)?)
            }
            None => (g.whole(), g.residual(f)?),
        };
        let quotient_order = host.order() / r.order();
        let cyclic = match subgroup {
            None => Some(g.quotient(&r)?.group.is_cyclic_of_order(quotient_order)),
            Some(_) => None,
        };
        Ok(json!({
            "formation": f.to_string(),
            "subgroup": subgroup,
            "residual": describe_subgroup(g, &r),
            "quotient_order": quotient_order,
            "quotient_cyclic": cyclic,
        }))
    })?;
    match ctx.format {
        ReportFormat::Machine => println!("{record}"),
        ReportFormat::Human => {
            let target = subgroup.unwrap_or("G");
            let gens: Vec<&str> = record["residual"]["generators"]
                .as_array()
                .map(|a| a.iter().filter_map(Value::as_str).collect())
                .unwrap_or_default();
            let gens = if gens.is_empty() { "trivial".to_string() } else { gens.join(", ") };
            println!("{f} residual of {target}: order {} <{gens}>", record["residual"]["order"]);
            let cyclic = match record["quotient_cyclic"].as_bool() {
                Some(true) => " (cyclic)",
                Some(false) => " (not cyclic)",
                None => "",
            };
            println!("quotient order {}{cyclic}", record["quotient_order"]);
        }
    }
    Ok(0)
}

fn parse_theorems(spec: &str) -> Result<Vec<TheoremId>, Failure> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    spec.split(',').map(|t| t.trim().parse::<TheoremId>().map_err(usage)).collect()
}

/// `A`/`B` pairs in a loaded file: either `A` and `B`, or `A.k` and `B.k`.
fn file_pairs(loaded: &LoadedGroup) -> Vec<(String, Subgroup, Subgroup)> {
    let mut out = Vec::new();
    for (name, a) in &loaded.subgroups {
        let suffix = match name.as_str() {
            "A" => Some(""),
            n => n.strip_prefix("A."),
        };
        if let Some(suffix) = suffix {
            let b_name = if suffix.is_empty() { "B".to_string() } else { format!("B.{suffix}") };
            if let Some(b) = loaded.subgroups.get(&b_name) {
                out.push((suffix.to_string(), a.clone(), b.clone()));
            }
        }
    }
    out
}

fn directory_instances(ctx: &Context, dir: &Path) -> Result<Vec<(String, Vec<CorpusInstance>)>, Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| usage(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "group"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for path in files {
        let text = read_text(&path)?;
        let doc = grouprod::io::parse_document(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let loaded = load(&path, &text, ctx.limits)?;
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let recipe = doc
            .provenance
            .as_deref()
            .and_then(|p| serde_json::from_str::<Recipe>(p).ok())
            .unwrap_or(Recipe::Document {
                path: path.display().to_string(),
            });
        let instances = file_pairs(&loaded)
            .into_iter()
            .map(|(suffix, a, b)| CorpusInstance {
                id: if suffix.is_empty() { stem.clone() } else { format!("{stem}#{suffix}") },
                recipe: recipe.clone(),
                group: loaded.group.clone(),
                a,
                b,
            })
            .collect();
        out.push((text, instances));
    }
    Ok(out)
}

fn run_directory(ctx: &Context, dir: &Path, theorems: &[TheoremId]) -> Result<(usize, Vec<TheoremReport>), Failure> {
    let files = directory_instances(ctx, dir)?;
    let mut count = 0;
    let mut reports = Vec::new();
    for (text, instances) in files {
        count += instances.len();
        for &t in theorems {
            let key = ResultCache::key(&text, "verify", &format!("{t}\u{0}{}", ctx.limits.enumeration_cap));
            let cached = ctx
                .cache
                .get(&key)
                .and_then(|v| serde_json::from_value::<Vec<TheoremReport>>(v).ok());
            let batch = match cached {
                Some(batch) => batch,
                None => {
                    let (batch, _) = run_corpus(&instances, &[t]);
                    if batch.iter().all(|r| r.verdict != Verdict::Errored) {
                        ctx.cache.put(&key, &serde_json::to_value(&batch).expect("reports serialize"));
                    }
                    batch
                }
            };
            reports.extend(batch);
        }
    }
    reports.sort_by(|x, y| (x.theorem_id.as_str(), &x.instance_id).cmp(&(y.theorem_id.as_str(), &y.instance_id)));
    Ok((count, reports))
}

fn verify(ctx: &Context, theorem: &str, corpus: &str, max_order: usize, selection: ReportSelection) -> Result<u8, Failure> {
    let theorems = parse_theorems(theorem)?;
    let (instances, reports) = if corpus == "builtin" {
        let corpus = builtin_corpus(max_order, ctx.limits)?;
        log::info!("builtin corpus: {} groups, {} instances", corpus.groups.len(), corpus.instances.len());
        let (reports, _) = run_corpus(&corpus.instances, &theorems);
        (corpus.instances.len(), reports)
    } else {
        run_directory(ctx, Path::new(corpus), &theorems)?
    };
    let summary = Summary::from_reports(instances, &reports);
    let shown: Vec<TheoremReport> = reports
        .into_iter()
        .filter(|r| match selection {
            ReportSelection::All => true,
            ReportSelection::Satisfied => r.verdict != Verdict::HypothesesFail,
            ReportSelection::Failures => !matches!(r.verdict, Verdict::HypothesesFail | Verdict::Verified),
        })
        .collect();
    if !(ctx.format == ReportFormat::Human && shown.is_empty()) {
        print!("{}", emit_reports(&shown, ctx.emit()));
    }
    print!("{}", emit_summary(&summary, ctx.format));
    let failed = summary.strict_counterexamples() > 0 || summary.totals.errored > 0;
    Ok(if failed { EXIT_FAILURE } else { 0 })
}

fn example972(ctx: &Context) -> Result<u8, Failure> {
    let ex = build_example_972()?;
    let battery = example_972_battery(&ex)?;
    let instance = ex.instance();
    let (reports, _) = run_corpus(std::slice::from_ref(&instance), &TheoremId::ALL);
    match ctx.format {
        ReportFormat::Machine => {
            for c in &battery {
                println!(
                    "{}",
                    json!({"check": c.name, "expected": c.expected, "observed": c.observed, "pass": c.pass})
                );
            }
        }
        ReportFormat::Human => {
            let width = battery.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
            println!("{:<width$} {:<6} EXPECTED / OBSERVED", "CHECK", "RESULT");
            for c in &battery {
                let result = if c.pass { "PASS" } else { "FAIL" };
                println!("{:<width$} {result:<6} {} / {}", c.name, c.expected, c.observed);
            }
            println!();
        }
    }
    print!("{}", emit_reports(&reports, ctx.emit()));
    let battery_ok = battery.iter().all(|c| c.pass);
    let strict_ok = reports
        .iter()
        .all(|r| r.theorem_id.is_external() || !matches!(r.verdict, Verdict::Counterexample | Verdict::Errored));
    Ok(if battery_ok && strict_ok { 0 } else { EXIT_FAILURE })
}

fn file_name_for(index: usize, recipe: &Recipe) -> String {
    let label: String = recipe
        .to_string()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    format!("{index:03}_{}.group", label.trim_matches('_'))
}

fn generate_corpus(ctx: &Context, out: &Path, max_order: usize) -> Result<u8, Failure> {
    fs::create_dir_all(out).map_err(|e| usage(format!("{}: {e}", out.display())))?;
    let groups = library_groups(max_order, ctx.limits)?;
    let write = |name: &str, text: String| -> Result<(), Failure> {
        let path = out.join(name);
        fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
    };
    let mut instance_count = 0;
    for (i, entry) in groups.iter().enumerate() {
        let instances = harvest_factorizations(entry)?;
        instance_count += instances.len();
        let mut named = Vec::new();
        for (k, inst) in instances.iter().enumerate() {
            named.push((format!("A.{k:03}"), inst.a.clone()));
            named.push((format!("B.{k:03}"), inst.b.clone()));
        }
        let provenance = serde_json::to_string(&entry.recipe).expect("recipes serialize");
        let doc = GroupDocument::from_group(&entry.group, &named, Some(provenance))?;
        write(&file_name_for(i, &entry.recipe), doc.serialize())?;
    }
    let ex = build_example_972()?;
    let named = [("A".to_string(), ex.a.clone()), ("B".to_string(), ex.b.clone())];
    let provenance = serde_json::to_string(&Recipe::Example972).expect("recipes serialize");
    let doc = GroupDocument::from_group(&ex.group, &named, Some(provenance))?;
    write("example972.group", doc.serialize())?;
    eprintln!(
        "wrote {} group files ({} instances) to {}",
        groups.len() + 1,
        instance_count + 1,
        out.display()
    );
    Ok(0)
}

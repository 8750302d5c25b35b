//! `vflat`: differential spectra, vanishing flats, closed-form tables,
//! covers and code weights from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! parameter errors.

mod source;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vanishing_flats::covers::{self, Cover};
use vanishing_flats::cycliccode::{self, CodeWeightReport};
use vanishing_flats::vflats::{self, table2, PowerFamily};
use vanishing_flats::{kloosterman, sample, DOPolynomial, FieldSpec, FunctionTable};

use source::{parse_int, parse_u32, Loaded};

/// Largest n for which `table table1` cross-checks against brute force.
const TABLE1_BRUTE_FORCE_MAX_N: u32 = 10;

#[derive(Parser)]
#[command(name = "vflat", version, about = "Vanishing flats of functions over GF(2^n)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "VFLAT_THREADS")]
    threads: Option<usize>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct FieldArgs {
    /// Field degree, 2..=16.
    #[arg(long)]
    n: u32,
    /// Defining polynomial as an integer (default: lowest-weight primitive).
    #[arg(long, value_parser = parse_u32)]
    modulus: Option<u32>,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldSpec> {
        source::field(self.n, self.modulus)
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Monomial x^d.
    #[arg(long, alias = "d", value_parser = parse_int)]
    monomial: Option<u64>,
    /// DO polynomial as `i,j:c` terms, e.g. "0,3:1,1,2:5".
    #[arg(long = "do")]
    do_terms: Option<String>,
    /// Univariate polynomial as `c:e` terms, e.g. "1:3,1:5".
    #[arg(long)]
    univariate: Option<String>,
    /// Value table, one integer per line.
    #[arg(long)]
    table_file: Option<PathBuf>,
}

impl SourceArgs {
    fn load(&self, field: FieldSpec) -> Result<Loaded> {
        if let Some(d) = self.monomial {
            return Loaded::monomial(field, d);
        }
        if let Some(s) = &self.do_terms {
            let p = DOPolynomial::new(field, &source::parse_do_terms(s)?)?;
            return Ok(Loaded::dopoly(p, format!("DO[{s}]")));
        }
        if let Some(s) = &self.univariate {
            let terms = source::parse_univariate(s)?;
            return Ok(Loaded {
                table: FunctionTable::from_univariate(field, &terms)?,
                monomial: None,
                dopoly: None,
                label: format!("univariate[{s}]"),
            });
        }
        let path = self.table_file.as_ref().context("no function source given")?;
        Ok(Loaded {
            table: source::read_table_file(field, path)?,
            monomial: None,
            dopoly: None,
            label: path.display().to_string(),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Differential spectrum and uniformity.
    Spectrum {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Count, list or export the vanishing flats.
    Vflats {
        #[arg(value_enum)]
        mode: VflatsMode,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        source: SourceArgs,
        /// Counting method for `count`.
        #[arg(long, value_enum, default_value_t = CountWith::Spectrum)]
        method: CountWith,
        /// Write the export to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Closed-form counts (table1) or the reference counts (table2).
    Table {
        #[arg(value_enum)]
        which: Which,
        /// Degree; table2 defaults to all of 2..=8.
        #[arg(long)]
        n: Option<u32>,
        /// Family name for table1 (default: every applicable family).
        #[arg(long)]
        family: Option<String>,
        /// Parameter t for the gold and kasami families.
        #[arg(long)]
        t: Option<u32>,
    },
    /// Build or verify covers.
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Weight-3 and weight-4 codeword counts.
    Codeweights {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = CodeMethod::Flats)]
        method: CodeMethod,
    },
    /// The Kloosterman value K(n).
    Kloosterman {
        /// A single degree.
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<u32>,
        #[arg(long, default_value_t = 2)]
        from: u32,
        #[arg(long, default_value_t = 16)]
        to: u32,
    },
    /// Vanishing-flat counts of random DO polynomials.
    DoSearch {
        #[command(flatten)]
        field: FieldArgs,
        /// Number of polynomials to sample.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Number of terms (default: uniform in 1..=n).
        #[arg(long)]
        support: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VflatsMode {
    Count,
    List,
    PqsExport,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountWith {
    Spectrum,
    Enumerate,
    /// Rank formula; DO sources only.
    Rank,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Table1,
    Table2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeMethod {
    Flats,
    Direct,
    Both,
}

#[derive(Subcommand)]
enum CoverAction {
    /// Build a cover from x^(2^t+1).
    Build {
        #[arg(value_enum)]
        kind: CoverKind,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        t: u32,
        /// gold2: the point x of {0, x, y, x+y}; y = w x for the smallest
        /// w in GF(2^s) \ {0, 1}.
        #[arg(long, value_parser = parse_u32, default_value = "1")]
        x: u32,
        /// subfield: the scale alpha of the cosets c + alpha GF(2^s).
        #[arg(long, value_parser = parse_u32, default_value = "1")]
        alpha: u32,
        /// Write the cover JSON to a file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a cover JSON file.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoverKind {
    /// Image of the trivial cover on {0, x, y, x+y}.
    Gold2,
    /// Images of the cosets of alpha GF(2^s).
    #[value(alias = "thm8")]
    Subfield,
}

/// A command result in every supported format.
struct Report {
    text: String,
    json: Value,
    csv: Option<String>,
    pass: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, csv: None, pass: true }
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn field_json(field: FieldSpec) -> Value {
    json!({ "n": field.n(), "modulus": field.modulus() })
}

fn cmd_spectrum(field: FieldSpec, f: &Loaded) -> Result<Report> {
    let spec = f.table.spectrum();
    let w = spec.normalized();
    let mut by_direction: BTreeMap<u32, u32> = BTreeMap::new();
    for &d in &spec.per_direction {
        *by_direction.entry(d).or_default() += 1;
    }
    let mut text = String::new();
    writeln!(text, "function: {} over GF(2^{}) mod {:#x}", f.label, field.n(), field.modulus())?;
    writeln!(text, "differential uniformity: {}", spec.uniformity)?;
    let dirs: Vec<String> = by_direction.iter().map(|(d, c)| format!("{d} ({c} directions)")).collect();
    writeln!(text, "per-direction uniformity: {}", dirs.join(", "))?;
    writeln!(text, "{:>8} {:>12} {:>10}", "value", "frequency", "w")?;
    for (v, c) in &spec.counts {
        let wv = w.as_ref().map_or("-".to_string(), |w| w[v].to_string());
        writeln!(text, "{v:>8} {c:>12} {wv:>10}")?;
    }
    let json = json!({
        "field": field_json(field),
        "function": f.label,
        "uniformity": spec.uniformity,
        "spectrum": spec.counts,
        "w": w,
        "direction_uniformity": by_direction,
    });
    Ok(Report::ok(text, json).with_csv(spec.to_csv()))
}

fn cmd_vflats(
    field: FieldSpec,
    f: &Loaded,
    mode: VflatsMode,
    method: CountWith,
    format: Format,
    output: Option<&PathBuf>,
) -> Result<Report> {
    match mode {
        VflatsMode::Count => {
            let count = match method {
                CountWith::Spectrum => vflats::count_via_spectrum(&f.table)?,
                CountWith::Enumerate => vflats::enumerate(&f.table).len() as u64,
                CountWith::Rank => match &f.dopoly {
                    Some(p) => p.count_vflats()?,
                    None => bail!("--method rank needs a --do source"),
                },
            };
            let b = vflats::bounds(&f.table, f.monomial.is_some());
            let method_name = method.to_possible_value().expect("named").get_name().to_string();
            let text = format!(
                "{count}\n# {} over GF(2^{}), method {method_name}, bounds [{}, {}]\n",
                f.label,
                field.n(),
                b.lower,
                b.upper
            );
            let json = json!({
                "field": field_json(field),
                "function": f.label,
                "count": count,
                "method": method_name,
                "lower": b.lower,
                "upper": b.upper,
            });
            let csv = format!("n,function,count,method\n{},{},{count},{method_name}\n", field.n(), f.label.replace(',', ";"));
            Ok(Report::ok(text, json).with_csv(csv))
        }
        VflatsMode::List => {
            let pqs = vflats::enumerate(&f.table);
            let text = format!("# {} blocks\n{}", pqs.len(), pqs.to_text());
            let mut csv = String::from("x1,x2,x3,x4\n");
            for b in pqs.blocks() {
                let [a, c, d, e] = b.points();
                writeln!(csv, "{a},{c},{d},{e}")?;
            }
            Ok(Report::ok(text, serde_json::to_value(&pqs)?).with_csv(csv))
        }
        VflatsMode::PqsExport => {
            let pqs = vflats::enumerate(&f.table);
            let body = match format {
                Format::Text => pqs.to_text(),
                Format::Json => serde_json::to_string(&pqs)? + "\n",
                Format::Csv => bail!("pqs-export supports text and json"),
            };
            match output {
                Some(path) => {
                    std::fs::write(path, &body).with_context(|| format!("writing {}", path.display()))?;
                    let text = format!("wrote {} blocks to {}\n", pqs.len(), path.display());
                    Ok(Report::ok(text, json!({ "block_count": pqs.len(), "path": path })))
                }
                None => Ok(Report::ok(body, serde_json::to_value(&pqs)?)),
            }
        }
    }
}

fn cmd_table1(n: u32, family: Option<&str>, t: Option<u32>) -> Result<Report> {
    let families: Vec<PowerFamily> = match family {
        Some(name) => vec![PowerFamily::from_name(name, t)?],
        None => {
            let mut all: Vec<PowerFamily> = Vec::new();
            for t in 1..=n / 2 {
                all.push(PowerFamily::Gold { t });
                all.push(PowerFamily::Kasami { t });
            }
            all.extend([
                PowerFamily::Inverse,
                PowerFamily::Niho,
                PowerFamily::Seven,
                PowerFamily::NearInverse,
                PowerFamily::HalfMersenne,
                PowerFamily::HalfMersenneShifted,
                PowerFamily::OddMersenne,
                PowerFamily::DoubleT,
            ]);
            all.retain(|f| f.check(n).is_ok());
            all
        }
    };
    let field = FieldSpec::with_default_modulus(n)?;
    let mut rows = Vec::new();
    let mut all_pass = true;
    let mut text = String::new();
    let mut csv = String::from("family,n,d,closed_form,brute_force,status\n");
    writeln!(text, "{:<26} {:>4} {:>8} {:>14} {:>14}  status", "family", "n", "d", "closed form", "brute force")?;
    for fam in families {
        let closed = vflats::closed_form_count(fam, n)?;
        for d in fam.exponents(n)? {
            let brute = if n <= TABLE1_BRUTE_FORCE_MAX_N {
                Some(vflats::count_via_spectrum(&FunctionTable::from_monomial(field, d)?)?)
            } else {
                None
            };
            let pass = brute.is_none_or(|b| b == closed);
            all_pass &= pass;
            let st = if brute.is_some() { status(pass) } else { "UNCHECKED" };
            let bs = brute.map_or("-".into(), |b| b.to_string());
            writeln!(text, "{:<26} {n:>4} {d:>8} {closed:>14} {bs:>14}  {st}", fam.to_string())?;
            writeln!(csv, "{},{n},{d},{closed},{bs},{st}", fam.to_string().replace(',', ";"))?;
            rows.push(json!({
                "family": fam, "n": n, "d": d, "closed_form": closed,
                "brute_force": brute, "status": st,
            }));
        }
    }
    Ok(Report::ok(text, json!({ "rows": rows, "pass": all_pass }))
        .with_csv(csv)
        .with_pass(all_pass))
}

fn cmd_table2(n: Option<u32>) -> Result<Report> {
    let degrees: Vec<u32> = match n {
        Some(n) if (2..=8).contains(&n) => vec![n],
        Some(n) => bail!("reference counts cover 2 <= n <= 8, got {n}"),
        None => (2..=8).collect(),
    };
    let mut rows = Vec::new();
    let mut all_pass = true;
    let mut text = String::new();
    let mut csv = String::from("n,d,expected,computed,closed_form,status\n");
    writeln!(text, "{:>3} {:>5} {:>10} {:>10}  status", "n", "d", "expected", "computed")?;
    for n in degrees {
        let field = FieldSpec::with_default_modulus(n)?;
        for r in table2::reference_counts(n) {
            let f = FunctionTable::from_monomial(field, r.d)?;
            let computed = vflats::enumerate(&f).len() as u64;
            let pass = computed == r.count;
            all_pass &= pass;
            let star = if r.from_closed_form { "" } else { "*" };
            writeln!(text, "{n:>3} {:>5} {:>10} {computed:>10}  {}", format!("{}{star}", r.d), r.count, status(pass))?;
            writeln!(csv, "{n},{},{},{computed},{},{}", r.d, r.count, r.from_closed_form, status(pass))?;
            rows.push(json!({
                "n": n, "d": r.d, "expected": r.count, "computed": computed,
                "from_closed_form": r.from_closed_form, "status": status(pass),
            }));
        }
    }
    Ok(Report::ok(text, json!({ "rows": rows, "pass": all_pass }))
        .with_csv(csv)
        .with_pass(all_pass))
}

fn cover_summary(c: &Cover) -> (String, Value, bool) {
    match covers::check_cover(c) {
        Err(e) => (
            format!("cover: FAIL\n{e}\n"),
            json!({ "cover": false, "diagnostic": e.to_string() }),
            false,
        ),
        Ok(()) => {
            let nonparallel = covers::verify_nonparallel(c).expect("checked cover");
            let skew = covers::verify_totally_skew(c).expect("checked cover");
            let groups = covers::parallel_decomposition(c).expect("checked cover");
            let sizes: BTreeMap<usize, usize> = groups.iter().fold(BTreeMap::new(), |mut m, g| {
                *m.entry(g.len()).or_default() += 1;
                m
            });
            let text = format!(
                "cover: PASS\nflats={} dimension={}\nnonparallel={nonparallel}\ntotally_skew={skew}\nparallel_groups={} (size: count {:?})\n",
                c.flats().len(),
                c.dimension(),
                groups.len(),
                sizes
            );
            let json = json!({
                "cover": true,
                "flats": c.flats().len(),
                "dimension": c.dimension(),
                "nonparallel": nonparallel,
                "totally_skew": skew,
                "parallel_groups": groups.len(),
                "group_sizes": sizes,
            });
            (text, json, true)
        }
    }
}

fn cmd_cover(action: &CoverAction) -> Result<Report> {
    match action {
        CoverAction::Build { kind, field, t, x, alpha, output } => {
            let fs = field.field()?;
            let cover = match kind {
                CoverKind::Gold2 => {
                    let s = gcd(fs.n(), *t);
                    let w = fs
                        .subfield(s)?
                        .into_iter()
                        .find(|&z| z > 1)
                        .with_context(|| format!("GF(2^{s}) has no element outside GF(2); need gcd(n, t) > 1"))?;
                    covers::gold_cover(fs, *t, *x, fs.mul(w, *x))?.1
                }
                CoverKind::Subfield => covers::subfield_coset_cover(fs, *t, *alpha)?,
            };
            let (mut text, summary, pass) = cover_summary(&cover);
            if let Some(path) = output {
                std::fs::write(path, serde_json::to_string_pretty(&cover)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
                writeln!(text, "wrote {}", path.display())?;
            } else if let Ok(listing) = cover.listing() {
                text.push_str(&listing);
            }
            let json = json!({ "summary": summary, "cover": cover });
            Ok(Report::ok(text, json).with_pass(pass))
        }
        CoverAction::Verify { input } => {
            let body = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
            let cover: Cover = serde_json::from_str(&body).with_context(|| format!("parsing {}", input.display()))?;
            let (text, summary, pass) = cover_summary(&cover);
            Ok(Report::ok(text, summary).with_pass(pass))
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn code_row(r: &CodeWeightReport) -> String {
    let n3 = r.n3.map_or("-".into(), |v| v.to_string());
    let method = serde_json::to_value(r.method).expect("serializable");
    format!("N3={n3} N4={} ({})", r.n4, method.as_str().unwrap_or("?"))
}

fn cmd_codeweights(field: FieldSpec, f: &Loaded, method: CodeMethod) -> Result<Report> {
    let flats = || -> Result<CodeWeightReport> {
        Ok(match f.monomial {
            Some(d) => cycliccode::weight_counts_from_flats(field, d)?,
            None => cycliccode::generalized_weight4_count(&f.table)?,
        })
    };
    let direct = || -> Result<CodeWeightReport> {
        Ok(match f.monomial {
            Some(d) => cycliccode::direct_low_weight_counts(field, d)?,
            None => cycliccode::generalized_weight4_direct(&f.table)?,
        })
    };
    let reports = match method {
        CodeMethod::Flats => vec![flats()?],
        CodeMethod::Direct => vec![direct()?],
        CodeMethod::Both => vec![flats()?, direct()?],
    };
    let agree = reports.windows(2).all(|w| w[0].n3 == w[1].n3 && w[0].n4 == w[1].n4);
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{}", code_row(r))?;
    }
    if reports.len() == 2 {
        writeln!(text, "agreement: {}", status(agree))?;
    }
    let mut csv = String::from("n,d,N3,N4,method\n");
    for r in &reports {
        let v = serde_json::to_value(r)?;
        writeln!(csv, "{},{},{},{},{}", v["n"], v["d"], v["N3"], v["N4"], v["method"].as_str().unwrap_or(""))?;
    }
    let json = if reports.len() == 1 {
        serde_json::to_value(reports[0])?
    } else {
        json!({ "reports": reports, "agree": agree })
    };
    Ok(Report::ok(text, json).with_csv(csv).with_pass(agree))
}

fn cmd_kloosterman(n: Option<u32>, from: u32, to: u32) -> Result<Report> {
    let degrees: Vec<u32> = match n {
        Some(n) => vec![n],
        None if from <= to => (from..=to).collect(),
        None => bail!("--from must not exceed --to"),
    };
    let mut text = String::new();
    let mut csv = String::from("n,K\n");
    let mut values = BTreeMap::new();
    for n in degrees {
        let k = kloosterman(n)?;
        writeln!(text, "K({n}) = {k}")?;
        writeln!(csv, "{n},{k}")?;
        values.insert(n, k);
    }
    Ok(Report::ok(text, json!({ "K": values })).with_csv(csv))
}

fn cmd_do_search(field: FieldSpec, samples: usize, support: Option<usize>, seed: u64) -> Result<Report> {
    use rand::Rng;
    let n = field.n();
    let max_support = (n * (n - 1) / 2) as usize;
    if let Some(s) = support {
        if s == 0 || s > max_support {
            bail!("--support must be in 1..={max_support}");
        }
    }
    let mut rng = sample::rng(seed);
    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    let mut smallest: Option<(u64, DOPolynomial)> = None;
    for _ in 0..samples {
        let k = support.unwrap_or_else(|| rng.gen_range(1..=(n as usize).min(max_support)));
        let p = DOPolynomial::random(field, k, &mut rng)?;
        let c = p.count_vflats()?;
        *histogram.entry(c).or_default() += 1;
        if c > 0 && smallest.as_ref().is_none_or(|(m, _)| c < *m) {
            smallest = Some((c, p));
        }
    }
    let floor = 1u64 << (n - 2);
    let hits = histogram.get(&floor).copied().unwrap_or(0);
    let mut text = format!("samples={samples} seed={seed}\n{:>12} {:>8}\n", "count", "samples");
    for (c, k) in &histogram {
        writeln!(text, "{c:>12} {k:>8}")?;
    }
    writeln!(text, "polynomials with exactly 2^(n-2) = {floor} flats: {hits}")?;
    if let Some((c, p)) = &smallest {
        writeln!(text, "smallest nonzero count {c}: {}", serde_json::to_string(p)?)?;
    }
    let mut csv = String::from("count,samples\n");
    for (c, k) in &histogram {
        writeln!(csv, "{c},{k}")?;
    }
    let json = json!({
        "field": field_json(field),
        "samples": samples,
        "seed": seed,
        "histogram": histogram,
        "floor": floor,
        "floor_hits": hits,
        "smallest": smallest.map(|(c, p)| json!({ "count": c, "polynomial": p })),
    });
    Ok(Report::ok(text, json).with_csv(csv))
}

fn run(cli: &Cli) -> Result<Report> {
    if let Some(k) = cli.threads {
        if k == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match &cli.command {
        Command::Spectrum { field, source } => {
            let fs = field.field()?;
            cmd_spectrum(fs, &source.load(fs)?)
        }
        Command::Vflats { mode, field, source, method, output } => {
            let fs = field.field()?;
            cmd_vflats(fs, &source.load(fs)?, *mode, *method, cli.format, output.as_ref())
        }
        Command::Table { which, n, family, t } => match which {
            Which::Table1 => {
                let n = n.context("table1 needs --n")?;
                cmd_table1(n, family.as_deref(), *t)
            }
            Which::Table2 => cmd_table2(*n),
        },
        Command::Cover { action } => cmd_cover(action),
        Command::Codeweights { field, source, method } => {
            let fs = field.field()?;
            cmd_codeweights(fs, &source.load(fs)?, *method)
        }
        Command::Kloosterman { n, from, to } => cmd_kloosterman(*n, *from, *to),
        Command::DoSearch { field, samples, support } => {
            cmd_do_search(field.field()?, *samples, *support, cli.seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
                ),
                Format::Csv => match &report.csv {
                    Some(csv) => print!("{csv}"),
                    None => {
                        eprintln!("error: this command has no CSV output");
                        return ExitCode::from(2);
                    }
                },
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

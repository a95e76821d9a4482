use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use olg::bracelab::{compare_cohomology, run_suite, AlgebraFixture, FiniteAlgebra, Lab, SuiteConfig, DEFAULT_SEED};
use olg::cyclo::{fmt_rational, rat, Cyclotomic, Rational};
use olg::error::Error;
use olg::invertible::Invertible;
use olg::koszul::cross_check;
use olg::orbifold::{check_g_frobenius, export_csv, export_json, OrbifoldAlgebra};
use olg::poly::{Monomial, Polynomial};

#[derive(Parser, Debug)]
#[command(name = "olg", version, about = "Orbifold Landau-Ginzburg B-models of invertible polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exponent matrix, atomic decomposition, weights, Milnor number.
    Classify { w: String },
    /// The transpose polynomial W^T.
    Mirror { w: String },
    /// Generators and order of G_W, characters, SL subgroup.
    Symmetry { w: String },
    /// Twisted sectors of (W, G).
    Sectors {
        w: String,
        #[arg(long, default_value = "full")]
        group: String,
    },
    /// Cup product structure constants.
    Product {
        w: String,
        #[arg(long, default_value = "full")]
        group: String,
        /// Also print the product on the G-invariant subspace.
        #[arg(long)]
        invariant: bool,
        /// Append the four-way cross-check of 1_g ∪ 1_{g^-1}.
        #[arg(long)]
        oracle: bool,
    },
    /// Exhaustive G-Frobenius axiom check.
    Frobenius {
        w: String,
        #[arg(long, default_value = "full")]
        group: String,
    },
    /// Four-way cross-check of 1_g ∪ 1_{g^-1}, one table per atom.
    Oracle { w: String },
    /// Randomized brace identities and low-degree cohomology comparison.
    Bracelab {
        /// Builtin algebra: trunc:N:ORDER[:W] or cyclic:M.
        #[arg(long, default_value = "trunc:3:3", conflicts_with = "fixture")]
        algebra: String,
        /// Algebra fixture JSON.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        max_arity: usize,
        /// Highest cohomological degree to compare; omit to skip.
        #[arg(long)]
        cohomology: Option<usize>,
    },
}

/// A rendered report and whether its mathematical checks passed.
struct Report {
    json: Value,
    pretty: String,
    csv: String,
    ok: bool,
}

/// An input, validation or I/O error; exit code 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn load_w(src: &str) -> Result<Invertible, Failure> {
    let path = Path::new(src);
    if !path.is_file() {
        return Ok(Invertible::parse(src)?);
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{src}: {e}")))?;
    match serde_json::from_str::<Value>(&text) {
        Ok(v) => Ok(Invertible::new(&from_matrix(&v)?)?),
        Err(_) => Ok(Invertible::parse(text.trim())?),
    }
}

/// `{"E": [[...]]}` as the sum of the row monomials.
fn from_matrix(v: &Value) -> Result<Polynomial, Failure> {
    let bad = || Failure(format!("Parse: expected {{\"E\": [[...]]}}, got {v}"));
    let rows = v.get("E").and_then(Value::as_array).ok_or_else(bad)?;
    let e: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.as_array().and_then(|r| r.iter().map(|x| x.as_u64().map(|x| x as u32)).collect()))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    let n = e.len();
    if n == 0 || e.iter().any(|r| r.len() != n) {
        return Err(Failure(format!("NotSquare: exponent matrix must be square and nonempty, got {n} rows")));
    }
    let mut w = Polynomial::zero(n);
    for r in e {
        w.add_term(Monomial(r), &Cyclotomic::one());
    }
    Ok(w)
}

fn header(inv: &Invertible, group: Option<&str>) -> Value {
    let (canon, _) = inv.canonical();
    json!({
        "tool": format!("olg {}", env!("CARGO_PKG_VERSION")),
        "polynomial": canon.polynomial().to_string(),
        "group": group,
    })
}

fn pretty_header(h: &Value) -> String {
    let mut s = format!("{}\nW = {}\n", h["tool"].as_str().unwrap_or(""), h["polynomial"].as_str().unwrap_or(""));
    if let Some(g) = h["group"].as_str() {
        let _ = writeln!(s, "G = {g}");
    }
    s
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
}

fn classify(src: &str) -> Result<Report, Failure> {
    let inv = load_w(src)?;
    let mirror = inv.transpose_mirror()?;
    let socle: Rational = inv.weights().iter().map(|q| rat(1, 1) - q * rat(2, 1)).sum();
    let atoms: Vec<String> = inv.atoms().iter().map(|a| a.label()).collect();
    let h = header(&inv, None);
    let json = json!({
        "header": h,
        "exponent_matrix": inv.exponent_matrix(),
        "atoms": inv.atoms(),
        "atom_labels": atoms,
        "weights": inv.weights_text(),
        "milnor": fmt_rational(&inv.milnor_number()),
        "socle_degree": fmt_rational(&socle),
        "transpose": mirror.polynomial().to_string(),
    });
    let mut pretty = pretty_header(&h);
    let _ = writeln!(pretty, "atoms: {}", atoms.join(" + "));
    let _ = writeln!(pretty, "E_W: {:?}", inv.exponent_matrix());
    let _ = writeln!(pretty, "q: ({})", inv.weights_text().join(", "));
    let _ = writeln!(pretty, "mu: {}", fmt_rational(&inv.milnor_number()));
    let _ = writeln!(pretty, "socle degree: {}", fmt_rational(&socle));
    let _ = writeln!(pretty, "W^T: {}", mirror.polynomial());
    let rows: Vec<Vec<String>> =
        (0..inv.nvars()).map(|i| vec![format!("x{}", i + 1), inv.weights_text()[i].clone(), atoms[inv.atom_of(i).0].clone()]).collect();
    Ok(Report { json, pretty, csv: csv(&["variable", "weight", "atom"], &rows), ok: true })
}

fn mirror(src: &str) -> Result<Report, Failure> {
    let inv = load_w(src)?;
    let t = inv.transpose_mirror()?;
    let h = header(&inv, None);
    let json = json!({ "header": h, "transpose": t.polynomial().to_string(), "exponent_matrix": t.exponent_matrix() });
    let pretty = format!("{}W^T = {}\n", pretty_header(&h), t.polynomial());
    Ok(Report { json, pretty, csv: csv(&["transpose"], &[vec![t.polynomial().to_string()]]), ok: true })
}

fn symmetry(src: &str) -> Result<Report, Failure> {
    let inv = load_w(src)?;
    let g = inv.symmetry_group();
    let sl = inv.sl_subgroup();
    let h = header(&inv, Some(&g.spec_text()));
    let gens: Vec<Value> = g.generator_orders().iter().map(|(e, o)| json!({ "phases": e.text(), "order": o })).collect();
    let chars: Vec<Vec<String>> = g.elements().iter().map(|e| vec![e.text(), e.chi().to_string()]).collect();
    let json = json!({
        "header": h,
        "order": g.order(),
        "generators": gens,
        "characters": chars.iter().map(|r| json!({ "g": r[0], "chi": r[1] })).collect::<Vec<_>>(),
        "sl_order": sl.order(),
    });
    let mut pretty = pretty_header(&h);
    let _ = writeln!(pretty, "|G_W| = {}, |G_W ∩ SL| = {}", g.order(), sl.order());
    for (e, o) in g.generator_orders() {
        let _ = writeln!(pretty, "generator ({}) of order {o}", e.text());
    }
    for r in &chars {
        let _ = writeln!(pretty, "  chi({}) = {}", r[0], r[1]);
    }
    Ok(Report { json, pretty, csv: csv(&["g", "chi"], &chars), ok: true })
}

fn algebra(src: &str, group: &str) -> Result<(Invertible, OrbifoldAlgebra), Failure> {
    let inv = load_w(src)?;
    let g = inv.group_from_spec(group)?;
    let alg = OrbifoldAlgebra::new(&inv, &g)?;
    Ok((inv, alg))
}

fn sectors(src: &str, group: &str) -> Result<Report, Failure> {
    let (inv, alg) = algebra(src, group)?;
    let h = header(&inv, Some(&alg.group().spec_text()));
    let exported = export_json(&alg, None);
    let mut pretty = pretty_header(&h);
    for s in alg.sectors() {
        let _ = writeln!(
            pretty,
            "g = ({}): W_g = {}, dim {}, {}",
            s.g.text(),
            s.locus.w_g.pretty(),
            s.dim(),
            if s.parity == 1 { "odd" } else { "even" }
        );
    }
    Ok(Report { json: json!({ "header": h, "sectors": exported["sectors"] }), pretty, csv: export_csv(&alg), ok: true })
}

/// Cross-check of each atom on its own variables.
fn oracle_tables(inv: &Invertible) -> Result<Report, Failure> {
    let mut tables = Vec::new();
    let mut pretty = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for atom in inv.atoms() {
        let single = Invertible::from_atoms(&[(atom.kind, atom.exps.clone())])?;
        let checks = cross_check(&single)?;
        let _ = writeln!(pretty, "{}:", atom.label());
        for r in &checks {
            ok &= r.agree;
            let _ = writeln!(
                pretty,
                "  g = ({}): graph {} | det {} | hess {} | retract {} | {}",
                r.g,
                r.graph_sum,
                r.det_quantum_hess,
                r.signed_hessian,
                r.retract,
                if r.agree { "agree" } else { "DISAGREE" }
            );
            rows.push(vec![
                atom.label(),
                r.g.clone(),
                r.graph_sum.clone(),
                r.det_quantum_hess.clone(),
                r.signed_hessian.clone(),
                r.retract.clone(),
                r.agree.to_string(),
            ]);
        }
        tables.push(json!({
            "atom": atom.label(),
            "polynomial": single.polynomial().to_string(),
            "all_agree": checks.iter().all(|r| r.agree),
            "rows": checks,
        }));
    }
    let header = ["atom", "g", "graph_sum", "det_quantum_hess", "signed_hessian", "retract", "agree"];
    Ok(Report { json: json!({ "agree": ok, "atoms": tables }), pretty, csv: csv(&header, &rows), ok })
}

fn oracle(src: &str) -> Result<Report, Failure> {
    let inv = load_w(src)?;
    let h = header(&inv, Some(&inv.symmetry_group().spec_text()));
    let table = oracle_tables(&inv.canonical().0)?;
    Ok(Report { json: json!({ "header": h, "oracle": table.json }), pretty: pretty_header(&h) + &table.pretty, ..table })
}

fn product(src: &str, group: &str, invariant: bool, with_oracle: bool) -> Result<Report, Failure> {
    let (inv, alg) = algebra(src, group)?;
    let h = header(&inv, Some(&alg.group().spec_text()));
    let basis = alg.basis().to_vec();
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut pretty = pretty_header(&h);
    let _ = writeln!(pretty, "dim H = {}", alg.dim());
    for &a in &basis {
        for &b in &basis {
            let c = alg.cup_basis(a, b);
            if c.is_zero() {
                continue;
            }
            let (la, lb, lc) = (alg.basis_label(a), alg.basis_label(b), alg.describe(&c));
            let _ = writeln!(pretty, "{la} ∪ {lb} = {lc}");
            entries.push(json!({ "a": la, "b": lb, "product": lc }));
            rows.push(vec![la, lb, lc]);
        }
    }
    let mut json = json!({
        "header": h,
        "dim": alg.dim(),
        "sectors": export_json(&alg, None)["sectors"],
        "table": entries,
    });
    if invariant {
        let sub = alg.invariant_subalgebra()?;
        let labels: Vec<String> = sub.basis.iter().map(|e| alg.describe(e)).collect();
        let table: Vec<Vec<Vec<String>>> =
            sub.table.iter().map(|r| r.iter().map(|v| v.iter().map(|c| c.to_string()).collect()).collect()).collect();
        let _ = writeln!(pretty, "invariant subalgebra, dim {}:", labels.len());
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(pretty, "  e{i} = {l}");
        }
        for (i, r) in table.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                if v.iter().any(|c| c != "0") {
                    let _ = writeln!(pretty, "  e{i} ∪ e{j} = [{}]", v.join(", "));
                }
            }
        }
        json["invariant"] = json!({ "basis": labels, "table": table });
    }
    let mut ok = true;
    if with_oracle {
        let table = oracle_tables(&inv.canonical().0)?;
        ok = table.ok;
        pretty.push_str("cross-check:\n");
        pretty.push_str(&table.pretty);
        json["oracle"] = table.json;
    }
    Ok(Report { json, pretty, csv: csv(&["a", "b", "product"], &rows), ok })
}

fn frobenius(src: &str, group: &str) -> Result<Report, Failure> {
    let (inv, alg) = algebra(src, group)?;
    let h = header(&inv, Some(&alg.group().spec_text()));
    let report = check_g_frobenius(&alg);
    let mut pretty = pretty_header(&h);
    let mut rows = Vec::new();
    for r in &report.results {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(pretty, "[{}] {}. {} ({} checked)", verdict, r.group, r.name, r.checked);
        if let Some(w) = &r.witness {
            let _ = writeln!(pretty, "    witness: {w}");
        }
        rows.push(vec![r.group.to_string(), r.name.to_string(), r.checked.to_string(), verdict.to_string(), r.witness.clone().unwrap_or_default()]);
    }
    let ok = report.passed();
    let first = report.failures().first().map(|r| json!({ "axiom": r.name, "witness": r.witness }));
    let json = json!({ "header": h, "passed": ok, "first_failure": first, "results": report.results });
    Ok(Report { json, pretty, csv: csv(&["group", "axiom", "checked", "verdict", "witness"], &rows), ok })
}

fn builtin_algebra(spec: &str) -> Result<FiniteAlgebra, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| Failure(format!("Parse: bad number `{s}` in `{spec}`")));
    match parts.as_slice() {
        ["trunc", n, order] => Ok(FiniteAlgebra::truncated_polynomial(num(n)?, num(order)? as i64, None)?),
        ["trunc", n, order, w] => Ok(FiniteAlgebra::truncated_polynomial(num(n)?, num(order)? as i64, Some(num(w)?))?),
        ["cyclic", m] => Ok(FiniteAlgebra::cyclic_group_algebra(num(m)?)?),
        _ => Err(Failure(format!("Parse: unknown algebra `{spec}`; use trunc:N:ORDER[:W] or cyclic:M"))),
    }
}

fn bracelab(
    spec: &str,
    fixture: Option<&Path>,
    samples: usize,
    max_arity: usize,
    degree: Option<usize>,
    seed: u64,
) -> Result<Report, Failure> {
    let alg = match fixture {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
            let f: AlgebraFixture =
                serde_json::from_str(&text).map_err(|e| Failure(format!("Parse: {}: {e}", p.display())))?;
            FiniteAlgebra::from_fixture(&f)?
        }
        None => builtin_algebra(spec)?,
    };
    let lab = Lab::new(alg);
    let report = run_suite(&lab, &SuiteConfig { samples, seed, max_arity })?;
    let mut ok = report.passed();
    let mut pretty = format!(
        "olg {}\nalgebra {} (dim {}), |G| = {}, seed {}\n",
        env!("CARGO_PKG_VERSION"),
        report.algebra,
        lab.dim(),
        report.group_order,
        report.seed
    );
    let mut rows = Vec::new();
    for r in &report.results {
        let verdict = if r.ok() { "PASS" } else { "FAIL" };
        let _ = writeln!(pretty, "[{verdict}] {} {}/{}", r.name, r.passed, r.samples);
        if let Some(w) = &r.witness {
            let _ = writeln!(pretty, "    witness: {w}");
        }
        rows.push(vec![r.name.clone(), r.passed.to_string(), r.samples.to_string(), verdict.to_string()]);
    }
    let mut json = json!({ "tool": format!("olg {}", env!("CARGO_PKG_VERSION")), "suite": report });
    if let Some(d) = degree {
        let cmp = compare_cohomology(&lab, d)?;
        for c in &cmp {
            ok &= c.agree();
            let _ = writeln!(pretty, "H^{}: invariant {} vs crossed {}", c.degree, c.invariant, c.crossed);
            rows.push(vec![format!("H^{}", c.degree), c.invariant.to_string(), c.crossed.to_string(), if c.agree() { "PASS" } else { "FAIL" }.into()]);
        }
        json["cohomology"] = json!(cmp);
    }
    Ok(Report { json, pretty, csv: csv(&["check", "passed", "samples", "verdict"], &rows), ok })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Classify { w } => classify(w),
        Command::Mirror { w } => mirror(w),
        Command::Symmetry { w } => symmetry(w),
        Command::Sectors { w, group } => sectors(w, group),
        Command::Product { w, group, invariant, oracle } => product(w, group, *invariant, *oracle),
        Command::Frobenius { w, group } => frobenius(w, group),
        Command::Oracle { w } => oracle(w),
        Command::Bracelab { algebra, fixture, samples, max_arity, cohomology } => {
            bracelab(algebra, fixture.as_deref(), *samples, *max_arity, *cohomology, cli.seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(Failure(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable report") + "\n",
        Format::Pretty => report.pretty,
        Format::Csv => report.csv,
    };
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

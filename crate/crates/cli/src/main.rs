//! `graphsig` command-line front end.
//!
//! Every command echoes its resolved configuration: a leading `# config: {…}`
//! line in CSV output, a `"config"` object in JSON output. The process exits
//! with 0 when the command succeeded and every check it ran passed, 1 when a
//! check failed and 2 on errors.
//!
//! Matrix CSV is one row per line with comma separators; complex entries are
//! written `re+imj` (for example `0.5-0.5j`). Lines starting with `#` are
//! comments.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use graphsig::io::{
    analysis_to_json, coherence_table_csv, graph_to_json, matrix_to_csv, parse_graph, parse_matrix_csv,
    parse_scalar_signal, parse_signal, scalar_signal_to_json, signal_to_json, BasisRepr, SpaceDescriptor, COHERENCE_EXPONENTS,
};
use graphsig::operators::analyze_translation_with_tol;
use graphsig::transform::promotes;
use graphsig::{
    coherence, convolve, dft_basis, eigenbasis, empirical_opnorm, fourier_opnorm, gft, igft, standard_graph, translate,
    translation_adjoint, translation_bound, translation_inverse, uncertainty_bound, uncertainty_ratio, young_bound,
    Basis64, Exponent, Graph, GraphFamily, Matrix64, ScalarField, ScalarSignal64, Signal64, Space64, UncertaintyVariant,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "graphsig", version, about = "Fourier analysis of vector-valued graph signals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Debug, Clone)]
struct Opts {
    /// Graph family (path, star, cycle, complete) or `file:PATH` to a graph JSON.
    #[arg(long, global = true, default_value = "path")]
    graph: String,
    /// Vertex count; 4 by default, 10 for the example signals.
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true)]
    directed: bool,
    /// Comma-separated basis sources: A, L, NL, DFT, I or `file:PATH`.
    #[arg(long, global = true)]
    basis: Option<String>,
    /// Comma-separated exponent list, e.g. `1,3/2,inf`.
    #[arg(long, global = true)]
    p: Option<String>,
    #[arg(long, global = true)]
    q: Option<String>,
    #[arg(long, global = true)]
    r: Option<String>,
    /// Value space descriptor, inline JSON or a path to a JSON file.
    #[arg(long, global = true)]
    space: Option<String>,
    #[arg(long, global = true)]
    signal: Option<PathBuf>,
    /// Scalar signal for `convolve`.
    #[arg(long, global = true)]
    alpha: Option<PathBuf>,
    /// 1-based vertex for the translation commands.
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Unitarity tolerance for bases read from files.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Threshold below which `|u_k(m)|` counts as zero.
    #[arg(long, global = true, default_value_t = 1e-12)]
    zero_tol: f64,
    /// Grid size: samples per function for `example-signal`, reciprocal grid for `young-bound`.
    #[arg(long, global = true)]
    grid: Option<usize>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Sup,
    L1,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Example {
    R3,
    Sincos,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Adjacency, degree, Laplacian and normalized Laplacian matrices.
    Matrices,
    /// `κ_p(U)` for each basis and exponent.
    CoherenceTable,
    /// Operator norm of the Fourier transform between mixed norms.
    Opnorm,
    /// Uncertainty bound, and the achieved ratio when `--signal` is given.
    Uncertainty {
        #[arg(long, value_enum)]
        variant: Variant,
    },
    /// Graph Fourier transform of `--signal`.
    Gft {
        /// Also write a long-format CSV of the transformed coordinates.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Inverse graph Fourier transform of `--signal`.
    Igft {
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// `alpha * signal`.
    Convolve,
    /// `T_m signal`.
    Translate,
    /// Kernel, invertibility and induced norms of `T_m` (every vertex unless `--m`).
    AnalyzeTranslation,
    /// `T_m^{-1} signal`.
    InvertTranslation,
    /// `T_m^* signal` on a Hilbert value space.
    Adjoint,
    /// Young constant `‖α ∗ f‖_r ≤ C ‖α‖_p ‖f‖_q` and the translation bound.
    YoungBound,
    /// The three-component and function-valued example signals.
    ExampleSignal {
        #[arg(value_enum)]
        which: Example,
    },
}

struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            if let Err(e) = emit(&cli.opts, &o.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if o.passed {
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

fn emit(opts: &Opts, text: &str) -> Result<()> {
    // commands that wrote their own files return no text
    if text.is_empty() {
        return Ok(());
    }
    match &opts.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let o = &cli.opts;
    match &cli.command {
        Command::Matrices => cmd_matrices(o),
        Command::CoherenceTable => cmd_coherence_table(o),
        Command::Opnorm => cmd_opnorm(o),
        Command::Uncertainty { variant } => cmd_uncertainty(o, *variant),
        Command::Gft { csv } => cmd_transform(o, csv.as_deref(), false),
        Command::Igft { csv } => cmd_transform(o, csv.as_deref(), true),
        Command::Convolve => cmd_convolve(o),
        Command::Translate => cmd_translate(o),
        Command::AnalyzeTranslation => cmd_analyze(o),
        Command::InvertTranslation => cmd_invert(o),
        Command::Adjoint => cmd_adjoint(o),
        Command::YoungBound => cmd_young(o),
        Command::ExampleSignal { which } => cmd_example(o, *which),
    }
}

/// The flags as given, with `resolved` overriding entries whose defaults
/// depend on the command.
fn config(name: &str, o: &Opts, format: Format, resolved: Value) -> Value {
    let mut cfg = json!({
        "command": name,
        "graph": o.graph,
        "n": o.n,
        "directed": o.directed,
        "basis": o.basis,
        "p": o.p,
        "q": o.q,
        "r": o.r,
        "space": o.space,
        "signal": o.signal.as_ref().map(|p| p.display().to_string()),
        "alpha": o.alpha.as_ref().map(|p| p.display().to_string()),
        "m": o.m,
        "seed": o.seed,
        "samples": o.samples,
        "tol": o.tol,
        "zero_tol": o.zero_tol,
        "grid": o.grid,
        "format": match format { Format::Csv => "csv", Format::Json => "json" },
    });
    if let (Some(map), Value::Object(over)) = (cfg.as_object_mut(), resolved) {
        map.extend(over);
    }
    cfg
}

fn csv_header(cfg: &Value) -> String {
    format!("# config: {cfg}\n")
}

fn json_doc(cfg: Value, body: Value) -> String {
    let mut doc = json!({ "config": cfg });
    if let (Some(map), Value::Object(extra)) = (doc.as_object_mut(), body) {
        map.extend(extra);
    }
    serde_json::to_string_pretty(&doc).expect("json serializes") + "\n"
}

fn build_graph(o: &Opts, default_n: usize) -> Result<Graph> {
    if let Some(path) = o.graph.strip_prefix("file:") {
        let text = fs::read_to_string(path).with_context(|| format!("reading graph {path}"))?;
        return Ok(parse_graph(&text)?);
    }
    let family: GraphFamily = o.graph.parse()?;
    Ok(standard_graph(family, o.n.unwrap_or(default_n), o.directed)?)
}

fn build_basis(src: &str, o: &Opts, default_n: usize) -> Result<(String, Basis64)> {
    if let Some(path) = src.strip_prefix("file:") {
        let text = fs::read_to_string(path).with_context(|| format!("reading basis {path}"))?;
        let u: Matrix64 = if text.trim_start().starts_with('{') {
            let repr: BasisRepr = serde_json::from_str(&text)?;
            let cols = repr.columns.iter().map(|c| c.iter().map(|s| s.to_complex()).collect()).collect();
            Matrix64::from_rows(cols)?.transpose()
        } else {
            parse_matrix_csv(&text)?
        };
        let b = Basis64::from_matrix(u, o.tol)?;
        let stem = Path::new(path).file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.into());
        return Ok((stem, b));
    }
    match src.to_ascii_uppercase().as_str() {
        "DFT" | "F" => Ok(("U_F".into(), dft_basis(graph_n(o, default_n)?))),
        "I" => Ok(("I".into(), Basis64::identity(graph_n(o, default_n)?))),
        "A" | "L" | "NL" => {
            let g = build_graph(o, default_n)?;
            let m: Matrix64 = match src.to_ascii_uppercase().as_str() {
                "A" => g.adjacency(),
                "L" => g.laplacian()?,
                _ => g.normalized_laplacian()?,
            };
            Ok((format!("U_{}", src.to_ascii_uppercase()), eigenbasis(&m)?))
        }
        other => bail!("unknown basis '{other}' (expected A, L, NL, DFT, I or file:PATH)"),
    }
}

fn graph_n(o: &Opts, default_n: usize) -> Result<usize> {
    if o.graph.starts_with("file:") {
        Ok(build_graph(o, default_n)?.vertex_count())
    } else {
        match o.n.unwrap_or(default_n) {
            0 => bail!("--n must be at least 1"),
            n => Ok(n),
        }
    }
}

fn single_basis(o: &Opts, default_n: usize) -> Result<(String, Basis64)> {
    let src = o.basis.as_deref().unwrap_or("A");
    if src.contains(',') {
        bail!("this command takes a single --basis");
    }
    build_basis(src, o, default_n)
}

fn exponents(list: &str) -> Result<Vec<Exponent>> {
    list.split(',').map(|s| s.trim().parse::<Exponent>().map_err(|e| anyhow!("exponent '{s}': {e}"))).collect()
}

fn single_exponent(v: Option<&str>, flag: &str, default: Exponent) -> Result<Exponent> {
    match v {
        None => Ok(default),
        Some(s) => match exponents(s)?.as_slice() {
            [e] => Ok(*e),
            _ => bail!("--{flag} takes a single exponent here"),
        },
    }
}

fn read_space(o: &Opts) -> Result<Space64> {
    let Some(spec) = &o.space else {
        return Ok(Space64::euclidean(1, ScalarField::Real)?);
    };
    let text = if spec.trim_start().starts_with('{') {
        spec.clone()
    } else {
        fs::read_to_string(spec).with_context(|| format!("reading space {spec}"))?
    };
    Ok(graphsig::io::parse_space(&text)?)
}

/// Accepts a bare signal document or one wrapped under a `"signal"` key.
fn read_signal(path: &Path) -> Result<Signal64> {
    let text = fs::read_to_string(path).with_context(|| format!("reading signal {}", path.display()))?;
    let v: Value = serde_json::from_str(&text)?;
    let inner = v.get("signal").cloned().unwrap_or(v);
    Ok(parse_signal(&inner.to_string())?)
}

fn require_signal(o: &Opts) -> Result<Signal64> {
    let path = o.signal.as_ref().ok_or_else(|| anyhow!("--signal is required"))?;
    read_signal(path)
}

fn require_m(o: &Opts) -> Result<usize> {
    o.m.ok_or_else(|| anyhow!("--m is required"))
}

fn basis_for_signal(o: &Opts, f: &Signal64) -> Result<(String, Basis64)> {
    let (name, b) = single_basis(o, f.len())?;
    if b.n() != f.len() {
        bail!("basis has {} vertices but the signal has {}", b.n(), f.len());
    }
    if promotes(f, &b) {
        eprintln!("warning: real-valued signal promoted to complex coordinates for basis {name}");
    }
    Ok((name, b))
}

fn cmd_matrices(o: &Opts) -> Result<Outcome> {
    let format = o.format.unwrap_or(Format::Csv);
    let g = build_graph(o, 4)?;
    let cfg = config("matrices", o, format, json!({ "n": g.vertex_count() }));
    let mut mats: Vec<(&str, Matrix64)> = vec![("A", g.adjacency())];
    if g.is_directed() {
        eprintln!("note: D, L and NL are not defined for directed graphs; emitting A only");
    } else {
        mats.push(("D", g.degree()?));
        mats.push(("L", g.laplacian()?));
        match g.normalized_laplacian() {
            Ok(nl) => mats.push(("NL", nl)),
            Err(e) => eprintln!("note: NL skipped: {e}"),
        }
    }
    match format {
        Format::Csv => {
            if let Some(dir) = &o.out {
                fs::create_dir_all(dir)?;
                for (name, m) in &mats {
                    let path = dir.join(format!("{name}.csv"));
                    fs::write(&path, csv_header(&cfg) + &matrix_to_csv(m))?;
                }
                return Ok(Outcome::ok(String::new()));
            }
            let mut out = csv_header(&cfg);
            for (name, m) in &mats {
                out.push_str(&format!("# {name}\n{}", matrix_to_csv(m)));
            }
            Ok(Outcome::ok(out))
        }
        Format::Json => {
            let mut body = serde_json::Map::new();
            body.insert("graph".into(), graph_to_json(&g));
            for (name, m) in &mats {
                body.insert((*name).into(), matrix_json(m));
            }
            Ok(Outcome::ok(json_doc(cfg, Value::Object(body))))
        }
    }
}

fn matrix_json(m: &Matrix64) -> Value {
    let complex = !m.is_real();
    Value::Array(
        (0..m.rows())
            .map(|r| m.row(r).iter().map(|z| if complex { json!([z.re, z.im]) } else { json!(z.re) }).collect())
            .collect(),
    )
}

fn cmd_coherence_table(o: &Opts) -> Result<Outcome> {
    let format = o.format.unwrap_or(Format::Csv);
    let p_list = o.p.clone().unwrap_or_else(|| COHERENCE_EXPONENTS.join(","));
    let ps = exponents(&p_list)?;
    let srcs = o.basis.as_deref().unwrap_or("A,L,NL,DFT");
    let cfg = config("coherence-table", o, format, json!({ "n": o.n.unwrap_or(4), "basis": srcs, "p": p_list }));
    let mut rows: Vec<(String, Vec<f64>)> = Vec::new();
    for src in srcs.split(',').map(str::trim) {
        let (name, b) = build_basis(src, o, 4)?;
        rows.push((name, ps.iter().map(|&p| coherence(&b, p)).collect()));
    }
    Ok(Outcome::ok(match format {
        Format::Csv => csv_header(&cfg) + &coherence_table_csv(&ps, &rows),
        Format::Json => json_doc(
            cfg,
            json!({
                "exponents": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "rows": rows.iter().map(|(n, v)| json!({ "basis": n, "values": v })).collect::<Vec<_>>(),
            }),
        ),
    }))
}

fn cmd_opnorm(o: &Opts) -> Result<Outcome> {
    let format = o.format.unwrap_or(Format::Json);
    let (name, b) = single_basis(o, 4)?;
    let space = read_space(o)?;
    let (p_list, q_list) = (o.p.as_deref().unwrap_or("2"), o.q.as_deref().unwrap_or("2"));
    let ps = exponents(p_list)?;
    let qs = exponents(q_list)?;
    let cfg = config("opnorm", o, format, json!({
        "n": b.n(),
        "basis": o.basis.as_deref().unwrap_or("A"),
        "p": p_list,
        "q": q_list,
        "space": SpaceDescriptor::from_space(&space),
    }));
    let mut passed = true;
    let mut reports = Vec::new();
    for &p in &ps {
        for &q in &qs {
            let rep = fourier_opnorm(&b, &space, p, q);
            let witness_ratio = rep.witness.as_ref().map(|w| gft(w, &b).expect("matching size").norm(q) / w.norm(p));
            let empirical = empirical_opnorm(&b, &space, p, q, o.samples, o.seed);
            let ok = empirical <= rep.bound * (1.0 + 1e-9) + 1e-12
                && witness_ratio.is_none_or(|w| (w - rep.bound).abs() <= 1e-9 * (1.0 + rep.bound));
            passed &= ok;
            reports.push((p, q, rep.bound, rep.exact, rep.formula, witness_ratio, empirical, ok));
        }
    }
    let text = match format {
        Format::Csv => {
            let mut s = csv_header(&cfg) + "basis,p,q,bound,exact,formula,witness_ratio,empirical,pass\n";
            for (p, q, bound, exact, formula, wr, emp, ok) in &reports {
                let wr = wr.map(|w| format!("{w:.4}")).unwrap_or_default();
                s.push_str(&format!("{name},{p},{q},{bound:.4},{exact},{formula},{wr},{emp:.4},{ok}\n"));
            }
            s
        }
        Format::Json => json_doc(
            cfg,
            json!({
                "basis": name,
                "space": SpaceDescriptor::from_space(&space),
                "reports": reports.iter().map(|(p, q, bound, exact, formula, wr, emp, ok)| json!({
                    "p": p.to_string(),
                    "q": q.to_string(),
                    "bound": bound,
                    "exact": exact,
                    "formula": formula.as_str(),
                    "witness_ratio": wr,
                    "empirical": { "value": emp, "seed": o.seed, "samples": o.samples },
                    "pass": ok,
                })).collect::<Vec<_>>(),
            }),
        ),
    };
    Ok(Outcome { text, passed })
}

fn cmd_uncertainty(o: &Opts, variant: Variant) -> Result<Outcome> {
    let format = o.format.unwrap_or(Format::Json);
    let signal = o.signal.as_deref().map(read_signal).transpose()?;
    let (name, b) = match &signal {
        Some(f) => basis_for_signal(o, f)?,
        None => single_basis(o, 4)?,
    };
    let p = single_exponent(o.p.as_deref(), "p", Exponent::TWO)?;
    let q = single_exponent(o.q.as_deref(), "q", Exponent::TWO)?;
    let cfg = config("uncertainty", o, format, json!({
        "n": b.n(),
        "basis": o.basis.as_deref().unwrap_or("A"),
        "p": p.to_string(),
        "q": q.to_string(),
    }));
    let v = match variant {
        Variant::Sup => UncertaintyVariant::Sup(p),
        Variant::L1 => UncertaintyVariant::L1(q),
        Variant::Mixed => UncertaintyVariant::Mixed(p, q),
    };
    let bound = uncertainty_bound(&b, v);
    let (num, den) = v.exponents();
    let (mut passed, mut ratio, mut message) = (true, None, None);
    if let Some(f) = &signal {
        match uncertainty_ratio(f, &b, num, den) {
            Ok(r) => {
                passed = r >= bound - 1e-9;
                ratio = Some(r);
            }
            Err(e) => {
                passed = false;
                message = Some(e.to_string());
                eprintln!("check failed: {e}");
            }
        }
    }
    let text = match format {
        Format::Csv => {
            let r = ratio.map(|r| format!("{r:.4}")).unwrap_or_default();
            let pass = if signal.is_some() { passed.to_string() } else { String::new() };
            csv_header(&cfg) + &format!("basis,variant,p,q,bound,ratio,pass\n{name},{},{num},{den},{bound:.4},{r},{pass}\n", v.name())
        }
        Format::Json => json_doc(
            cfg,
            json!({
                "basis": name,
                "variant": v.name(),
                "p": num.to_string(),
                "q": den.to_string(),
                "bound": bound,
                "ratio": ratio,
                "pass": signal.as_ref().map(|_| passed),
                "message": message,
            }),
        ),
    };
    Ok(Outcome { text, passed })
}

fn long_csv(cfg: &Value, f: &Signal64) -> String {
    let mut out = csv_header(cfg) + "vertex,component,sample,re,im\n";
    let space = f.space();
    let (components, per) = match space.kind() {
        graphsig::SpaceKind::SampledFunction { grid, components, .. } => (components, grid),
        graphsig::SpaceKind::FiniteDim { dim, .. } => (dim, 1),
    };
    for n in 0..f.len() {
        let v = f.value(n);
        for c in 0..components {
            for s in 0..per {
                let z = v[c * per + s];
                out.push_str(&format!("{},{},{},{},{}\n", n + 1, c + 1, s, z.re, z.im));
            }
        }
    }
    out
}

fn cmd_transform(o: &Opts, csv: Option<&Path>, inverse: bool) -> Result<Outcome> {
    let name = if inverse { "igft" } else { "gft" };
    let f = require_signal(o)?;
    let (bname, b) = basis_for_signal(o, &f)?;
    let cfg = config(name, o, o.format.unwrap_or(Format::Json), resolved_basis(o, &b));
    let out = if inverse { igft(&f, &b)? } else { gft(&f, &b)? };
    if let Some(path) = csv {
        fs::write(path, long_csv(&cfg, &out)).with_context(|| format!("writing {}", path.display()))?;
    }
    if o.format == Some(Format::Csv) {
        return Ok(Outcome::ok(long_csv(&cfg, &out)));
    }
    Ok(Outcome::ok(json_doc(cfg, json!({ "basis": bname, "signal": signal_to_json(&out) }))))
}

fn resolved_basis(o: &Opts, b: &Basis64) -> Value {
    json!({ "n": b.n(), "basis": o.basis.as_deref().unwrap_or("A") })
}

fn signal_output(name: &str, o: &Opts, basis: &str, f: &Signal64, extra: Value) -> Outcome {
    let cfg = config(name, o, o.format.unwrap_or(Format::Json), json!({ "n": f.len(), "basis": o.basis.as_deref().unwrap_or("A") }));
    if o.format == Some(Format::Csv) {
        return Outcome::ok(long_csv(&cfg, f));
    }
    let mut body = json!({ "basis": basis, "signal": signal_to_json(f) });
    if let (Some(map), Value::Object(more)) = (body.as_object_mut(), extra) {
        map.extend(more);
    }
    Outcome::ok(json_doc(cfg, body))
}

fn cmd_convolve(o: &Opts) -> Result<Outcome> {
    let f = require_signal(o)?;
    let path = o.alpha.as_ref().ok_or_else(|| anyhow!("--alpha is required"))?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text)?;
    let inner = v.get("signal").or_else(|| v.get("alpha")).cloned().unwrap_or(v);
    let alpha: ScalarSignal64 = parse_scalar_signal(&inner.to_string())?;
    let (name, b) = basis_for_signal(o, &f)?;
    let out = convolve(&alpha, &f, &b)?;
    Ok(signal_output("convolve", o, &name, &out, json!({ "alpha": scalar_signal_to_json(&alpha) })))
}

fn cmd_translate(o: &Opts) -> Result<Outcome> {
    let f = require_signal(o)?;
    let m = require_m(o)?;
    let (name, b) = basis_for_signal(o, &f)?;
    let out = translate(m, &f, &b)?;
    Ok(signal_output("translate", o, &name, &out, json!({ "m": m })))
}

fn cmd_analyze(o: &Opts) -> Result<Outcome> {
    let format = o.format.unwrap_or(Format::Json);
    let (name, b) = single_basis(o, 4)?;
    let space = read_space(o)?;
    let hilbert = space.is_hilbert();
    let mut resolved = resolved_basis(o, &b);
    resolved["space"] = serde_json::to_value(SpaceDescriptor::from_space(&space))?;
    let cfg = config("analyze-translation", o, format, resolved);
    let ms: Vec<usize> = match o.m {
        Some(m) => vec![m],
        None => (1..=b.n()).collect(),
    };
    let analyses = ms.iter().map(|&m| analyze_translation_with_tol(m, &b, hilbert, o.zero_tol)).collect::<graphsig::Result<Vec<_>>>()?;
    Ok(Outcome::ok(match format {
        Format::Csv => {
            let mut s = csv_header(&cfg) + "m,K0,invertible,induced_norm,induced_inverse_norm,isometry_condition\n";
            for a in &analyses {
                let k0: Vec<String> = a.k0.iter().map(usize::to_string).collect();
                let num = |x: Option<f64>| x.map(|v| format!("{v:.4}")).unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    a.m,
                    k0.join(" "),
                    a.invertible,
                    num(a.induced_norm),
                    num(a.induced_inverse_norm),
                    a.isometry_condition
                ));
            }
            s
        }
        Format::Json => json_doc(
            cfg,
            json!({ "basis": name, "hilbert": hilbert, "analyses": analyses.iter().map(analysis_to_json).collect::<Vec<_>>() }),
        ),
    }))
}

fn cmd_invert(o: &Opts) -> Result<Outcome> {
    let g = require_signal(o)?;
    let m = require_m(o)?;
    let (name, b) = basis_for_signal(o, &g)?;
    let inv = translation_inverse(m, &g, &b)?;
    Ok(signal_output("invert-translation", o, &name, &inv.signal, json!({ "m": m, "condition": inv.condition })))
}

fn cmd_adjoint(o: &Opts) -> Result<Outcome> {
    let g = require_signal(o)?;
    let m = require_m(o)?;
    let (name, b) = basis_for_signal(o, &g)?;
    if !g.space().is_hilbert() {
        let desc = serde_json::to_string(&SpaceDescriptor::from_space(g.space()))?;
        bail!("adjoint requires a Hilbert value space; got {desc}");
    }
    let out = translation_adjoint(m, &g, &b)?;
    Ok(signal_output("adjoint", o, &name, &out, json!({ "m": m })))
}

fn cmd_young(o: &Opts) -> Result<Outcome> {
    let format = o.format.unwrap_or(Format::Json);
    let (name, b) = single_basis(o, 4)?;
    let grid = o.grid.unwrap_or(16);
    let p = single_exponent(o.p.as_deref(), "p", Exponent::ONE)?;
    let q = single_exponent(o.q.as_deref(), "q", Exponent::TWO)?;
    let r = single_exponent(o.r.as_deref(), "r", Exponent::TWO)?;
    let mut resolved = resolved_basis(o, &b);
    for (k, v) in [("p", p), ("q", q), ("r", r)] {
        resolved[k] = json!(v.to_string());
    }
    resolved["grid"] = json!(grid);
    let cfg = config("young-bound", o, format, resolved);
    let young = young_bound(&b, p, q, r, grid)?;
    let trans = translation_bound(&b, q, r, grid)?;
    let num = |x: f64| if x.is_finite() { json!(x) } else { json!("inf") };
    Ok(Outcome::ok(match format {
        Format::Csv => csv_header(&cfg) + &format!("basis,p,q,r,young_bound,translation_bound\n{name},{p},{q},{r},{young:.4},{trans:.4}\n"),
        Format::Json => json_doc(
            cfg,
            json!({
                "basis": name,
                "p": p.to_string(),
                "q": q.to_string(),
                "r": r.to_string(),
                "grid": grid,
                "young_bound": num(young),
                "translation_bound": num(trans),
            }),
        ),
    }))
}

const R3_EXAMPLE: [[f64; 10]; 3] = [
    [-1.0, -2.0, 0.0, 0.0, 3.0, 6.0, 0.0, -3.0, 2.0, 1.0],
    [-3.0, -1.0, -2.0, 0.0, 3.0, 0.0, -4.0, 0.0, 1.0, 0.0],
    [0.0, 1.0, 3.0, 4.0, -4.0, 0.0, 0.0, -1.0, 2.0, -3.0],
];

fn example_signal(which: Example, n: usize, grid: usize) -> Result<Signal64> {
    match which {
        Example::R3 => {
            if n != 10 {
                bail!("the three-component example is defined on 10 vertices");
            }
            let space = Space64::euclidean(3, ScalarField::Real)?;
            let rows: Vec<Vec<f64>> = (0..10).map(|v| R3_EXAMPLE.iter().map(|c| c[v]).collect()).collect();
            Ok(Signal64::from_real_rows(space, &rows)?)
        }
        Example::Sincos => {
            let space = Space64::sampled_functions(grid, 2, 0.0, 100.0, ScalarField::Real)?;
            let ts = space.sample_points();
            let rows: Vec<Vec<f64>> = (1..=n)
                .map(|v| {
                    let v = v as f64;
                    ts.iter().map(|t| (t + 0.3 * v).sin()).chain(ts.iter().map(|t| (t + 0.2 * v).cos())).collect()
                })
                .collect();
            Ok(Signal64::from_real_rows(space, &rows)?)
        }
    }
}

fn cmd_example(o: &Opts, which: Example) -> Result<Outcome> {
    let (n, grid) = (o.n.unwrap_or(10), o.grid.unwrap_or(graphsig::valuespace::DEFAULT_GRID));
    let resolved = match which {
        Example::R3 => json!({ "n": n }),
        Example::Sincos => json!({ "n": n, "grid": grid }),
    };
    let cfg = config("example-signal", o, o.format.unwrap_or(Format::Json), resolved);
    let f = example_signal(which, n, grid)?;
    if o.format == Some(Format::Csv) {
        return Ok(Outcome::ok(long_csv(&cfg, &f)));
    }
    Ok(Outcome::ok(json_doc(cfg, json!({ "signal": signal_to_json(&f) }))))
}

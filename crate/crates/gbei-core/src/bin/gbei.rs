//! Command-line front end: analysis reports, cut sets, Groebner output,
//! decomposition checks, certificate verification, and family sweeps.
//!
//! Exit codes: 0 success / verified, 1 check failed, 2 disconnected graph,
//! 3 parse or usage error, 4 resource cap hit, 70 internal error.

use clap::{Parser, Subcommand, ValueEnum};
use gbei_core::bei::{self, TriState};
use gbei_core::certificates::{self, CertReport, Certificate};
use gbei_core::graph::SimpleGraph;
use gbei_core::groebner::GbBudget;
use gbei_core::monomial::MonomialOrder;
use gbei_core::poly::RingSpec;
use gbei_core::{Error, Result};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "gbei",
    version,
    about = "Edge-minor ideals of graphs: bounds, decompositions, and radical certificates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bounds and classification report for a graph.
    Analyze {
        /// Graph file: first line n, then one `i j` edge per line.
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the cut sets of a connected graph.
    Cutsets {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generators, reduced Groebner basis, initial ideal, and height.
    Ideal {
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
        order: OrderArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_gb_seconds: Option<f64>,
        #[arg(long)]
        max_gb_terms: Option<u64>,
    },
    /// Check the cut-set prime decomposition by reduced-basis equality.
    Decompose {
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_gb_seconds: Option<f64>,
        #[arg(long)]
        max_gb_terms: Option<u64>,
    },
    /// Verify a certificate file or a builtin certificate.
    Verify {
        /// Certificate file; graph references resolve next to it.
        certfile: Option<PathBuf>,
        /// Verify the named builtin certificate instead.
        #[arg(long, conflicts_with = "certfile")]
        builtin: Option<String>,
        /// Verify every builtin certificate.
        #[arg(long, conflicts_with_all = ["certfile", "builtin"])]
        all_builtin: bool,
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_gb_seconds: Option<f64>,
        #[arg(long)]
        max_gb_terms: Option<u64>,
    },
    /// List builtin certificates; optionally export them as files.
    Catalog {
        #[arg(long)]
        json: bool,
        /// Write each certificate (and its graph) into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// One bounds report per parameter value of a graph family.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        json: bool,
        /// Also run the resource-capped decomposition check per row.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        max_gb_seconds: Option<f64>,
        #[arg(long)]
        max_gb_terms: Option<u64>,
    },
}

fn budget(max_gb_terms: Option<u64>, max_gb_seconds: Option<f64>) -> GbBudget {
    GbBudget {
        max_term_ops: max_gb_terms.or(GbBudget::default().max_term_ops),
        max_seconds: max_gb_seconds,
    }
}

fn load_graph(path: &Path) -> Result<SimpleGraph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    SimpleGraph::parse(&text)
}

fn tri(t: TriState) -> &'static str {
    match t {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "unknown",
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn cmd_analyze(path: &Path, m: u32, characteristic: u64, json: bool) -> Result<i32> {
    let g = load_graph(path)?;
    let report = bei::bounds_report(m, &g, characteristic)?;
    if json {
        print_json(&report)?;
    } else {
        print!("{}", report.to_text());
    }
    Ok(0)
}

fn cmd_cutsets(path: &Path, json: bool) -> Result<i32> {
    let g = load_graph(path)?;
    let cuts = g.cut_sets()?;
    if json {
        print_json(&serde_json::json!({
            "graph": g.canonical_id(),
            "cut_sets": cuts,
        }))?;
    } else {
        println!("graph: {}", g.canonical_id());
        println!("cut sets: {}", cuts.len());
        for t in &cuts {
            let inner: Vec<String> = t.iter().map(u32::to_string).collect();
            println!("{{{}}}", inner.join(","));
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_ideal(
    path: &Path,
    m: u32,
    characteristic: u64,
    order: OrderArg,
    json: bool,
    max_gb_seconds: Option<f64>,
    max_gb_terms: Option<u64>,
) -> Result<i32> {
    let g = load_graph(path)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = RingSpec::new(m, g.n() as u32, characteristic)?;
    let active = match order {
        OrderArg::Degrevlex => MonomialOrder::degrevlex(spec.varcount()),
        OrderArg::Lex => MonomialOrder::lex(spec.varcount()),
    };
    let gbei = bei::build_gbei_with(
        m,
        &g,
        active.clone(),
        budget(max_gb_terms, max_gb_seconds),
        characteristic,
    )?;
    let basis = gbei.ideal().groebner()?;
    let initial = gbei.ideal().initial_ideal(&active)?;
    let height = gbei.ideal().height_oracle()?;
    let dimension = spec.varcount() as i64 - height as i64;
    let order_name = match order {
        OrderArg::Degrevlex => "degrevlex",
        OrderArg::Lex => "lex",
    };
    let gens: Vec<String> = gbei
        .ideal()
        .generators()
        .iter()
        .map(|p| p.to_string_with(&active))
        .collect();
    let basis_text: Vec<String> = basis.iter().map(|p| p.to_string_with(&active)).collect();
    let initial_text: Vec<String> = initial
        .iter()
        .map(|mo| {
            gbei_core::poly::Polynomial::monomial_term(
                spec,
                mo.clone(),
                gbei_core::field::Coeff::one(characteristic),
            )
            .to_string_with(&active)
        })
        .collect();
    if json {
        print_json(&serde_json::json!({
            "graph": g.canonical_id(),
            "m": m,
            "char": characteristic,
            "order": order_name,
            "generators": gens,
            "groebner": basis_text,
            "initial": initial_text,
            "height": height,
            "dimension": dimension,
        }))?;
    } else {
        println!("graph: {}", g.canonical_id());
        println!("m: {m}  char: {characteristic}  order: {order_name}");
        println!("generators: {}", gens.len());
        for t in &gens {
            println!("  {t}");
        }
        println!("reduced groebner basis: {}", basis_text.len());
        for t in &basis_text {
            println!("  {t}");
        }
        println!("initial ideal: {}", initial_text.join(", "));
        println!("height: {height}");
        println!("dimension: {dimension}");
    }
    Ok(0)
}

fn cmd_decompose(
    path: &Path,
    m: u32,
    characteristic: u64,
    json: bool,
    max_gb_seconds: Option<f64>,
    max_gb_terms: Option<u64>,
) -> Result<i32> {
    let g = load_graph(path)?;
    let primes = bei::minimal_primes(m, &g, characteristic)?;
    let outcome = bei::decompose_verify(
        m,
        &g,
        characteristic,
        &budget(max_gb_terms, max_gb_seconds),
    )?;
    if json {
        let prime_rows: Vec<serde_json::Value> = primes
            .iter()
            .map(|p| {
                serde_json::json!({
                    "t": p.t(),
                    "height": p.height(),
                    "components": p.components(),
                })
            })
            .collect();
        print_json(&serde_json::json!({
            "graph": g.canonical_id(),
            "m": m,
            "char": characteristic,
            "minimal_primes": prime_rows,
            "holds": outcome.holds,
        }))?;
    } else {
        println!("graph: {}", g.canonical_id());
        println!("m: {m}  char: {characteristic}");
        println!("minimal primes: {}", primes.len());
        for p in &primes {
            let inner: Vec<String> = p.t().iter().map(u32::to_string).collect();
            println!("  T={{{}}}: height {}", inner.join(","), p.height());
        }
        println!(
            "identity holds: {}",
            if outcome.holds { "yes" } else { "no" }
        );
    }
    Ok(if outcome.holds { 0 } else { 1 })
}

fn print_cert_report(report: &CertReport) {
    println!("certificate: {}", report.name);
    println!(
        "witness in target: {}",
        if report.witness_in_target { "ok" } else { "FAILED" }
    );
    for w in &report.witness_failures {
        println!("  not in target: {w}");
    }
    println!("{:<55} {:>7} {:>5}  ok", "claim", "claimed", "found");
    for c in &report.claims {
        let claimed = c.claimed.map_or("-".to_string(), |k| k.to_string());
        let found = c.found.map_or("-".to_string(), |k| k.to_string());
        println!(
            "{:<55} {:>7} {:>5}  {}",
            c.generator,
            claimed,
            found,
            if c.ok { "yes" } else { "NO" }
        );
    }
    println!("result: {}", if report.pass { "pass" } else { "fail" });
}

fn verify_one(cert: &Certificate, kmax: u32, json: bool, budget: &GbBudget) -> Result<bool> {
    let report = certificates::verify(cert, kmax, budget)?;
    if json {
        print_json(&report)?;
    } else {
        print_cert_report(&report);
    }
    Ok(report.pass)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    certfile: Option<&Path>,
    builtin: Option<&str>,
    all_builtin: bool,
    kmax: u32,
    json: bool,
    max_gb_seconds: Option<f64>,
    max_gb_terms: Option<u64>,
) -> Result<i32> {
    let b = budget(max_gb_terms, max_gb_seconds);
    if all_builtin {
        let mut all_pass = true;
        for cert in certificates::builtin_catalog() {
            all_pass &= verify_one(&cert, kmax, json, &b)?;
        }
        return Ok(if all_pass { 0 } else { 1 });
    }
    let cert = if let Some(name) = builtin {
        certificates::builtin(name)?
    } else {
        let path = certfile.ok_or_else(|| {
            Error::InvalidInput("pass a certificate file, --builtin NAME, or --all-builtin".into())
        })?;
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "certificate".into());
        let loader = move |file: &str| -> Result<SimpleGraph> {
            let p = base.join(file);
            let text = fs::read_to_string(&p)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?;
            SimpleGraph::parse(&text)
        };
        certificates::parse_certificate(&name, &text, &loader)?
    };
    Ok(if verify_one(&cert, kmax, json, &b)? { 0 } else { 1 })
}

fn cmd_catalog(json: bool, export: Option<&Path>) -> Result<i32> {
    let catalog = certificates::builtin_catalog();
    if json {
        let rows: Vec<serde_json::Value> = catalog
            .iter()
            .map(|c| {
                serde_json::json!({
                    "name": c.name,
                    "m": c.spec.m,
                    "n": c.spec.n,
                    "char": c.spec.characteristic,
                    "witness_size": c.witness.len(),
                    "claims": c.claims.len(),
                    "source": c.source,
                })
            })
            .collect();
        print_json(&rows)?;
    } else {
        for c in &catalog {
            println!(
                "{}: ring {}x{} char {}, witness {}, claims {}  ({})",
                c.name,
                c.spec.m,
                c.spec.n,
                c.spec.characteristic,
                c.witness.len(),
                c.claims.len(),
                c.source
            );
        }
    }
    if let Some(dir) = export {
        fs::create_dir_all(dir)
            .map_err(|e| Error::InvalidInput(format!("cannot create {}: {e}", dir.display())))?;
        for c in &catalog {
            let graph_name = format!("{}.graph", c.name);
            let (text, graph_text) = certificates::render_certificate(c, Some(&graph_name))?;
            let cert_path = dir.join(format!("{}.cert", c.name));
            fs::write(&cert_path, text).map_err(|e| {
                Error::InvalidInput(format!("cannot write {}: {e}", cert_path.display()))
            })?;
            if let Some(gt) = graph_text {
                let graph_path = dir.join(&graph_name);
                fs::write(&graph_path, gt).map_err(|e| {
                    Error::InvalidInput(format!("cannot write {}: {e}", graph_path.display()))
                })?;
            }
            println!("wrote {}", cert_path.display());
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    family: &str,
    from: usize,
    to: usize,
    m: u32,
    characteristic: u64,
    json: bool,
    check: bool,
    max_gb_seconds: Option<f64>,
    max_gb_terms: Option<u64>,
) -> Result<i32> {
    if !bei::SWEEP_FAMILIES.contains(&family) {
        return Err(Error::InvalidInput(format!(
            "unknown family {family:?}; known: {}",
            bei::SWEEP_FAMILIES.join(", ")
        )));
    }
    if from > to {
        return Err(Error::InvalidInput(format!(
            "empty range {from}..{to}"
        )));
    }
    let b = budget(max_gb_terms, max_gb_seconds);
    type Row = (usize, bei::BoundsReport, Option<Option<bool>>);
    // Rows are pure analyses: evaluate them concurrently, then assemble in
    // parameter order.
    let rows: Result<Vec<Row>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (from..=to)
            .map(|param| {
                let b = b.clone();
                scope.spawn(move || -> Result<Row> {
                    let g = bei::sweep_graph(family, param)?;
                    let report = bei::bounds_report(m, &g, characteristic)?;
                    let decompose = if check {
                        match bei::decompose_verify(m, &g, characteristic, &b) {
                            Ok(out) => Some(Some(out.holds)),
                            Err(Error::ResourceCap(_)) => Some(None),
                            Err(e) => return Err(e),
                        }
                    } else {
                        None
                    };
                    Ok((param, report, decompose))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep row panicked"))
            .collect()
    });
    let rows = rows?;
    if json {
        let out: Vec<serde_json::Value> = rows
            .iter()
            .map(|(param, report, decompose)| {
                let mut v = serde_json::json!({
                    "family": family,
                    "param": param,
                    "report": report,
                });
                if let Some(d) = decompose {
                    v["decompose"] = match d {
                        Some(holds) => serde_json::json!(holds),
                        None => serde_json::json!("not attempted"),
                    };
                }
                v
            })
            .collect();
        print_json(&out)?;
    } else {
        let mut header = "family,param,graph,m,char,ht,mu,pd_lo,pd_hi,cd_lo,cd_hi,ara_lo,ara_hi,ci,aci,cci,stci".to_string();
        if check {
            header.push_str(",decompose");
        }
        println!("{header}");
        for (param, r, decompose) in &rows {
            let mut line = format!(
                "{family},{param},\"{}\",{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.graph,
                r.m,
                r.characteristic,
                r.ht,
                r.mu,
                r.bounds.pd.lo,
                r.bounds.pd.hi,
                r.bounds.cd.lo,
                r.bounds.cd.hi,
                r.bounds.ara.lo,
                r.bounds.ara.hi,
                tri(r.flags.ci),
                tri(r.flags.aci),
                tri(r.flags.cci),
                tri(r.flags.stci),
            );
            if let Some(d) = decompose {
                line.push(',');
                line.push_str(match d {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "not attempted",
                });
            }
            println!("{line}");
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Analyze {
            graph,
            m,
            characteristic,
            json,
        } => cmd_analyze(&graph, m, characteristic, json),
        Cmd::Cutsets { graph, json } => cmd_cutsets(&graph, json),
        Cmd::Ideal {
            graph,
            m,
            characteristic,
            order,
            json,
            max_gb_seconds,
            max_gb_terms,
        } => cmd_ideal(
            &graph,
            m,
            characteristic,
            order,
            json,
            max_gb_seconds,
            max_gb_terms,
        ),
        Cmd::Decompose {
            graph,
            m,
            characteristic,
            json,
            max_gb_seconds,
            max_gb_terms,
        } => cmd_decompose(&graph, m, characteristic, json, max_gb_seconds, max_gb_terms),
        Cmd::Verify {
            certfile,
            builtin,
            all_builtin,
            kmax,
            json,
            max_gb_seconds,
            max_gb_terms,
        } => cmd_verify(
            certfile.as_deref(),
            builtin.as_deref(),
            all_builtin,
            kmax,
            json,
            max_gb_seconds,
            max_gb_terms,
        ),
        Cmd::Catalog { json, export } => cmd_catalog(json, export.as_deref()),
        Cmd::Sweep {
            family,
            from,
            to,
            m,
            characteristic,
            json,
            check,
            max_gb_seconds,
            max_gb_terms,
        } => cmd_sweep(
            &family,
            from,
            to,
            m,
            characteristic,
            json,
            check,
            max_gb_seconds,
            max_gb_terms,
        ),
    }
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Disconnected => 2,
        Error::Parse(_) | Error::InvalidInput(_) | Error::UnitIdeal => 3,
        Error::ResourceCap(_) => 4,
        Error::Internal(_) => 70,
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            match &e {
                Error::ResourceCap(msg) => eprintln!("not attempted: {msg}"),
                other => eprintln!("error: {other}"),
            }
            std::process::exit(error_exit_code(&e));
        }
    }
}

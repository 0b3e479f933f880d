//! Command-line front end: exact length, reflection length and excess
//! computations in finite Coxeter groups, class tables and golden-data
//! verification.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal failure,
//! 2 usage error, 3 enumeration budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use coxcess::conjugacy::{self, Profile};
use coxcess::excess::{self, ExcessCertificate};
use coxcess::report::{self, ReportOptions};
use coxcess::signed::{self, BdFamily, SignedPermutation};
use coxcess::util::SplitMix;
use coxcess::{CoxeterSystem, CoxeterType, Element, Error};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "coxcess",
    version,
    about = "Exact excess and minimal-length computations in finite Coxeter groups",
    long_about = "Exact-arithmetic engine for finite Coxeter groups: lengths, reflection \
                  lengths, conjugacy classes, minimal-length elements and the excess \
                  statistics of involution factorizations.\n\n\
                  Signed permutations are written in one-line notation, the signed image \
                  of each point in order: \"-2 +4 +3 -1\"."
)]
struct Cli {
    /// Coxeter type, e.g. F4, H3, B4, I2(7), A2xB2
    #[arg(long = "type", global = true)]
    group_type: Option<String>,

    /// Enumeration profile; `extended` raises the budget enough for E7
    #[arg(long, global = true, value_enum, default_value_t = ProfileArg::Default)]
    profile: ProfileArg,

    /// Directory for class caches (COXCESS_CACHE overrides this)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Worker threads (0 = all available); results are identical either way
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Seed for sampled runs
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Record wall-clock time in reports (off keeps output byte-identical)
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Default,
    Extended,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Show the system: rank, order, roots, Coxeter matrix
    Info,
    /// Enumerate all conjugacy classes with their statistics
    Classes,
    /// The cuspidal-class table with |X_min| and |X0_min| per class
    CuspidalReport,
    /// Length, reflection length, e(w) and E(w) of one element
    Excess {
        /// Generator word such as 1324, or w0 for the longest element
        #[arg(long)]
        word: Option<String>,
        /// Signed permutation in one-line notation, e.g. "-2 +4 +3 -1"
        #[arg(long, allow_hyphen_values = true)]
        sp: Option<String>,
        /// Analyze this many seeded random elements instead
        #[arg(long)]
        random: Option<usize>,
    },
    /// Re-verify a claimed involution factorization w = x·y from scratch
    Certify {
        #[arg(long)]
        w: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Claimed defect l(x)+l(y)-l(w), checked if given
        #[arg(long)]
        defect: Option<usize>,
    },
    /// Check that every conjugacy class has a minimal-length element with
    /// e = E = 0
    VerifyTheorem,
    /// Minimal cuspidal element of B_n/D_n for a partition, as a product of
    /// two involutions
    ConstructMin {
        /// B or D
        #[arg(long)]
        family: String,
        /// Non-increasing partition, e.g. 3,2
        #[arg(long)]
        partition: String,
    },
    /// Zero-excess Coxeter element from the 2-coloring of the Coxeter graph
    Coxeter,
    /// The Sym(4k) element with e = 0 and reflection excess at least 4(k-1)^2
    Bigxs {
        #[arg(long)]
        k: usize,
    },
    /// All involution factorizations of (145)(236) in Sym(6)
    Table1,
    /// Compare a computed cuspidal table against expected data
    VerifyTable {
        /// Expected-table JSON; defaults to the bundled table for --type
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                Error::InvalidType(_)
                | Error::RankLimit { .. }
                | Error::RootLimit { .. }
                | Error::WordParse(_)
                | Error::SignedPerm(_)
                | Error::OutOfScope(_)
                | Error::InvalidComponent { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    };
    emit(&out);
    code
}

/// Write to stdout, treating a closed pipe as an orderly end of output.
fn emit(s: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(s.as_bytes()).is_err() || stdout.flush().is_err() {
        std::process::exit(0);
    }
}

fn profile_of(cli: &Cli) -> Profile {
    match cli.profile {
        ProfileArg::Default => Profile::Default,
        ProfileArg::Extended => Profile::Extended,
    }
}

fn cache_dir_of(cli: &Cli) -> Option<PathBuf> {
    std::env::var_os("COXCESS_CACHE").map(PathBuf::from).or_else(|| cli.cache_dir.clone())
}

fn required_type(cli: &Cli) -> Result<CoxeterType, Error> {
    let name = cli
        .group_type
        .as_deref()
        .ok_or_else(|| Error::InvalidType("this command needs --type".into()))?;
    CoxeterType::parse(name)
}

fn parse_element(sys: &CoxeterSystem, word: &str) -> Result<Element, Error> {
    if word == "w0" {
        return Ok(sys.longest_element());
    }
    Ok(sys.element_of_word(&report::parse_word(word, sys.rank())?))
}

fn certificate_json(cert: &ExcessCertificate) -> serde_json::Value {
    json!({
        "x": report::format_word(&cert.x_word),
        "y": report::format_word(&cert.y_word),
        "defect": cert.defect,
        "reflection_additive": cert.reflection_additive,
    })
}

fn run(cli: &Cli, out: &mut String) -> Result<ExitCode, Error> {
    let budget = profile_of(cli).budget();
    match &cli.command {
        Command::Info => {
            let t = required_type(cli)?;
            let sys = CoxeterSystem::build(&t)?;
            if cli.format == FormatArg::Json {
                let doc = json!({
                    "type": t.to_string(),
                    "rank": sys.rank(),
                    "positive_roots": sys.n_positive_roots(),
                    "group_order": sys.group_order(),
                    "irreducible": sys.is_irreducible(),
                    "coxeter_matrix": sys.coxeter_matrix(),
                    "longest_element_word": report::format_word(&sys.reduced_word(&sys.longest_element())),
                });
                out.push_str(&report::report_to_json(&doc));
            } else {
                let _ = writeln!(out, "type:            {t}");
                let _ = writeln!(out, "rank:            {}", sys.rank());
                let _ = writeln!(out, "positive roots:  {}", sys.n_positive_roots());
                let _ = writeln!(out, "group order:     {}", sys.group_order());
                let _ = writeln!(out, "coxeter matrix:");
                for row in sys.coxeter_matrix() {
                    let _ = writeln!(
                        out,
                        "  {}",
                        row.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes => {
            let t = required_type(cli)?;
            let sys = CoxeterSystem::build(&t)?;
            let classes = report::classes_cached(&sys, &budget, cache_dir_of(cli).as_deref())?;
            let rows: Vec<serde_json::Value> = classes
                .iter()
                .map(|c| {
                    let fp = conjugacy::fingerprint(&sys, c);
                    json!({
                        "size": c.size(),
                        "l_min": c.l_min(),
                        "x_min": c.x_min_count(),
                        "order": fp.order,
                        "cuspidal": sys.is_cuspidal_element(c.representative()),
                        "rep": report::format_word(&sys.reduced_word(c.representative())),
                    })
                })
                .collect();
            match cli.format {
                FormatArg::Json => {
                    let doc = json!({"type": t.to_string(), "class_count": rows.len(), "rows": rows});
                    out.push_str(&report::report_to_json(&doc));
                }
                FormatArg::Csv => {
                    let _ = writeln!(out, "size,l_min,x_min,order,cuspidal,rep");
                    for r in &rows {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            r["size"], r["l_min"], r["x_min"], r["order"], r["cuspidal"],
                            r["rep"].as_str().unwrap()
                        );
                    }
                }
                FormatArg::Text => {
                    let _ = writeln!(out, "{} conjugacy classes of {t}", rows.len());
                    let _ = writeln!(
                        out,
                        "{:>8} {:>6} {:>7} {:>6} {:>9}  rep",
                        "size", "l_min", "|Xmin|", "order", "cuspidal"
                    );
                    for r in &rows {
                        let _ = writeln!(
                            out,
                            "{:>8} {:>6} {:>7} {:>6} {:>9}  {}",
                            r["size"].as_u64().unwrap(),
                            r["l_min"].as_u64().unwrap(),
                            r["x_min"].as_u64().unwrap(),
                            r["order"].as_u64().unwrap(),
                            r["cuspidal"].as_bool().unwrap(),
                            r["rep"].as_str().unwrap()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CuspidalReport => {
            let t = required_type(cli)?;
            let opts = ReportOptions {
                profile: profile_of(cli),
                threads: cli.threads,
                cache_dir: cache_dir_of(cli),
                timing: cli.timing,
            };
            let doc = report::cuspidal_report(&t, &opts)?;
            match cli.format {
                FormatArg::Json => out.push_str(&report::report_to_json(&doc)),
                FormatArg::Csv => out.push_str(&report::report_to_csv(&doc)),
                FormatArg::Text => out.push_str(&report::report_to_text(&doc)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Excess { word, sp, random } => {
            let t = required_type(cli)?;
            let sys = CoxeterSystem::build(&t)?;
            let mut targets: Vec<Element> = Vec::new();
            if let Some(word) = word {
                targets.push(parse_element(&sys, word)?);
            }
            if let Some(line) = sp {
                let sp = SignedPermutation::parse_one_line(line)?;
                targets.push(signed::to_element(&sp, &sys)?);
            }
            if let Some(n) = random {
                let mut rng = SplitMix::new(cli.seed);
                for _ in 0..*n {
                    targets.push(sys.random_element(&mut rng));
                }
            }
            if targets.is_empty() {
                return Err(Error::WordParse("give --word, --sp or --random".into()));
            }
            let mut docs = Vec::new();
            for w in &targets {
                let r = excess::excess_report_for(&sys, w, &budget)?;
                docs.push(json!({
                    "word": report::format_word(&sys.reduced_word(w)),
                    "length": sys.length(w),
                    "reflection_length": sys.reflection_length(w),
                    "excess": r.excess,
                    "reflection_excess": r.reflection_excess,
                    "reversing_involutions": r.reversing_involutions,
                    "certificate": certificate_json(&r.best_plain),
                    "reflective_certificate": certificate_json(&r.best_reflective),
                }));
            }
            if cli.format == FormatArg::Json {
                out.push_str(&report::report_to_json(&json!({
                    "type": t.to_string(),
                    "elements": docs
                })));
            } else {
                for d in &docs {
                    let _ = writeln!(
                        out,
                        "w = {}  l = {}, L = {}, e = {}, E = {}",
                        d["word"].as_str().unwrap(),
                        d["length"], d["reflection_length"], d["excess"], d["reflection_excess"]
                    );
                    let _ = writeln!(
                        out,
                        "  e-witness: x = {}, y = {} (defect {})",
                        d["certificate"]["x"].as_str().unwrap(),
                        d["certificate"]["y"].as_str().unwrap(),
                        d["certificate"]["defect"]
                    );
                    let _ = writeln!(
                        out,
                        "  E-witness: x = {}, y = {} (defect {})",
                        d["reflective_certificate"]["x"].as_str().unwrap(),
                        d["reflective_certificate"]["y"].as_str().unwrap(),
                        d["reflective_certificate"]["defect"]
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { w, x, y, defect } => {
            let t = required_type(cli)?;
            let sys = CoxeterSystem::build(&t)?;
            let w = parse_element(&sys, w)?;
            let xw = report::parse_word(x, sys.rank())?;
            let yw = report::parse_word(y, sys.rank())?;
            let xe = sys.element_of_word(&xw);
            let ye = sys.element_of_word(&yw);
            let computed_defect =
                (sys.length(&xe) + sys.length(&ye)).wrapping_sub(sys.length(&w));
            let additive = sys.reflection_length(&xe) + sys.reflection_length(&ye)
                == sys.reflection_length(&w);
            let cert = ExcessCertificate {
                x_word: xw,
                y_word: yw,
                defect: defect.unwrap_or(computed_defect),
                reflection_additive: additive,
            };
            match excess::validate_certificate(&sys, &w, &cert) {
                Ok(()) => {
                    let _ = writeln!(
                        out,
                        "valid: x² = y² = 1, x·y = w, defect {} ({}reflection-additive)",
                        cert.defect,
                        if additive { "" } else { "not " }
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(problems) => {
                    for p in &problems {
                        let _ = writeln!(out, "invalid: {p}");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::VerifyTheorem => {
            let t = required_type(cli)?;
            let sys = CoxeterSystem::build(&t)?;
            let rep = excess::verify_theorem(&sys, &budget, cli.threads)?;
            let rows: Vec<serde_json::Value> = rep
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "size": r.size,
                        "l_min": r.l_min,
                        "x_min": r.x_min_count,
                        "cuspidal": r.cuspidal,
                        "witness": r.witness.as_ref().map(|(w, cert)| json!({
                            "word": report::format_word(&sys.reduced_word(w)),
                            "x": report::format_word(&cert.x_word),
                            "y": report::format_word(&cert.y_word),
                        })),
                    })
                })
                .collect();
            if cli.format == FormatArg::Json {
                let doc = json!({
                    "type": t.to_string(),
                    "classes": rep.class_count,
                    "all_pass": rep.all_pass(),
                    "rows": rows,
                });
                out.push_str(&report::report_to_json(&doc));
            } else {
                let _ = writeln!(out, "{t}: {} conjugacy classes", rep.class_count);
                for r in &rows {
                    let status = if r["witness"].is_null() { "FAIL" } else { "ok" };
                    let _ = writeln!(
                        out,
                        "  size {:>7} l_min {:>3} |Xmin| {:>5} {}",
                        r["size"].as_u64().unwrap(),
                        r["l_min"].as_u64().unwrap(),
                        r["x_min"].as_u64().unwrap(),
                        status
                    );
                }
                let _ = writeln!(
                    out,
                    "{}",
                    if rep.all_pass() {
                        "every class has a minimal-length element with e = E = 0"
                    } else {
                        "VIOLATION: some class has no zero-excess minimal element"
                    }
                );
            }
            Ok(if rep.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::ConstructMin { family, partition } => {
            let family = match family.to_ascii_uppercase().as_str() {
                "B" => BdFamily::B,
                "D" => BdFamily::D,
                other => {
                    return Err(Error::SignedPerm(format!("family must be B or D, got {other}")))
                }
            };
            let parts: Result<Vec<usize>, _> =
                partition.split(',').map(|p| p.trim().parse::<usize>()).collect();
            let parts = parts.map_err(|_| Error::SignedPerm(format!("bad partition {partition:?}")))?;
            let lambda = signed::CuspidalPartition::new(parts)?;
            let mc = signed::construct_min_cuspidal(&lambda, family)?;
            let n = lambda.n();
            let type_name = format!("{}{n}", if family == BdFamily::B { "B" } else { "D" });
            let sys = CoxeterSystem::build(&CoxeterType::parse(&type_name)?)?;
            let tau = signed::to_element(&mc.tau, &sys)?;
            let sigma = signed::to_element(&mc.sigma, &sys)?;
            let w = signed::to_element(&mc.w, &sys)?;
            let doc = json!({
                "type": type_name,
                "partition": lambda.parts(),
                "tau": mc.tau.cycle_string(),
                "sigma": mc.sigma.cycle_string(),
                "w": mc.w.cycle_string(),
                "tau_word": report::format_word(&sys.reduced_word(&tau)),
                "sigma_word": report::format_word(&sys.reduced_word(&sigma)),
                "w_word": report::format_word(&sys.reduced_word(&w)),
                "length": sys.length(&w),
                "min_length": mc.min_length,
                "length_tau": sys.length(&tau),
                "length_sigma": sys.length(&sigma),
            });
            if cli.format == FormatArg::Json {
                out.push_str(&report::report_to_json(&doc));
            } else {
                let _ = writeln!(
                    out,
                    "w = tau·sigma = {} · {} = {}",
                    doc["tau"].as_str().unwrap(),
                    doc["sigma"].as_str().unwrap(),
                    doc["w"].as_str().unwrap()
                );
                let _ = writeln!(
                    out,
                    "l(w) = {} = l(tau) + l(sigma) = {} + {} (class minimum {})",
                    doc["length"], doc["length_tau"], doc["length_sigma"], doc["min_length"]
                );
                let _ = writeln!(
                    out,
                    "words: tau = {}, sigma = {}, w = {}",
                    doc["tau_word"].as_str().unwrap(),
                    doc["sigma_word"].as_str().unwrap(),
                    doc["w_word"].as_str().unwrap()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Coxeter => {
            let t = required_type(cli)?;
            let sys = CoxeterSystem::build(&t)?;
            let bc = signed::coxeter_bicolored(&sys);
            let doc = json!({
                "type": t.to_string(),
                "part_one": bc.part_one.iter().map(|g| g + 1).collect::<Vec<_>>(),
                "part_two": bc.part_two.iter().map(|g| g + 1).collect::<Vec<_>>(),
                "x": report::format_word(&sys.reduced_word(&bc.x)),
                "y": report::format_word(&sys.reduced_word(&bc.y)),
                "w": report::format_word(&sys.reduced_word(&bc.w)),
                "length": sys.length(&bc.w),
            });
            if cli.format == FormatArg::Json {
                out.push_str(&report::report_to_json(&doc));
            } else {
                let _ = writeln!(out, "2-coloring {} / {}", doc["part_one"], doc["part_two"]);
                let _ = writeln!(
                    out,
                    "x = {}, y = {}, w = xy = {} with l(w) = {} = rank",
                    doc["x"].as_str().unwrap(),
                    doc["y"].as_str().unwrap(),
                    doc["w"].as_str().unwrap(),
                    doc["length"]
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bigxs { k } => {
            let bx = signed::bigxs(*k)?;
            let bound = 4 * (k.saturating_sub(1)) * (k.saturating_sub(1));
            let analysis = signed::sym_excess(&bx.w, 10_000_000)?;
            let doc = json!({
                "k": k,
                "degree": 4 * k,
                "degenerate": bx.degenerate,
                "w1": bx.w1.cycle_string(),
                "w2": bx.w2.cycle_string(),
                "w": bx.w.cycle_string(),
                "x": bx.x.cycle_string(),
                "y": bx.y.cycle_string(),
                "length": analysis.length,
                "reflection_length": analysis.reflection_length,
                "excess": analysis.excess,
                "reflection_excess": analysis.reflection_excess,
                "bound": bound,
            });
            if cli.format == FormatArg::Json {
                out.push_str(&report::report_to_json(&doc));
            } else {
                let _ = writeln!(
                    out,
                    "w = w1·w2 = {} · {}",
                    doc["w1"].as_str().unwrap(),
                    doc["w2"].as_str().unwrap()
                );
                let _ = writeln!(out, "x = {}", doc["x"].as_str().unwrap());
                let _ = writeln!(out, "y = {}", doc["y"].as_str().unwrap());
                let _ = writeln!(
                    out,
                    "l(w) = {}, L(w) = {}, e(w) = {}, E(w) = {} (bound 4(k-1)^2 = {})",
                    doc["length"], doc["reflection_length"], doc["excess"],
                    doc["reflection_excess"], doc["bound"]
                );
                if bx.degenerate {
                    let _ = writeln!(
                        out,
                        "k = 1 is degenerate: w is an involution and the bound is vacuous"
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 => {
            let doc = report::table1_report()?;
            match cli.format {
                FormatArg::Json => out.push_str(&report::report_to_json(&doc)),
                FormatArg::Csv => out.push_str(&report::table1_to_csv(&doc)),
                FormatArg::Text => out.push_str(&report::table1_to_text(&doc)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTable { expected } => {
            let t = required_type(cli)?;
            let type_name = t.to_string();
            if type_name == "E8" && expected.is_none() {
                let diff = report::verify_e8_limited()?;
                for n in &diff.notes {
                    let _ = writeln!(out, "note: {n}");
                }
                for m in &diff.mismatches {
                    let _ = writeln!(out, "mismatch: {m}");
                }
                return Ok(if diff.is_match() { ExitCode::SUCCESS } else { ExitCode::from(1) });
            }
            let expected = match expected {
                Some(path) => report::load_expected(path)?,
                None => report::bundled_expected(&type_name).ok_or_else(|| {
                    Error::InvalidType(format!("no bundled expected table for {type_name}"))
                })?,
            };
            let opts = ReportOptions {
                profile: profile_of(cli),
                threads: cli.threads,
                cache_dir: cache_dir_of(cli),
                timing: cli.timing,
            };
            let doc = report::cuspidal_report(&t, &opts)?;
            let sys = CoxeterSystem::build(&t)?;
            let diff = report::compare_report(&sys, &doc, &expected, &budget, true);
            for n in &diff.notes {
                let _ = writeln!(out, "note: {n}");
            }
            if diff.is_match() {
                let _ = writeln!(
                    out,
                    "{type_name}: computed table matches expected data ({} rows)",
                    doc.rows.len()
                );
                Ok(ExitCode::SUCCESS)
            } else {
                for m in &diff.mismatches {
                    let _ = writeln!(out, "mismatch: {m}");
                }
                Ok(ExitCode::from(1))
            }
        }
    }
}

//! Command-line frontend.
//!
//! Subcommands: `solve`, `classify`, `reduce-sat`, `reduce-q3sat`,
//! `greens`, `shorten`, `catalog`. Exit codes: 0 for success (and for
//! "member"), 1 for a definite non-member, 2 for errors of any kind,
//! including an exceeded state budget and failed `--verify` checks.

use crate::catalog;
use crate::classify::{classify_general, classify_rees, classify_rees_identity};
use crate::error::{Error, Result};
use crate::formats::{AmbientSpec, InstanceJson, ReesJson, SemigroupJson};
use crate::reduce::{
    pspace_triple_conditions, q3sat_direct_conditions, q3sat_to_smp, sat_to_smp, CnfFormula,
    Q3SatFormula,
};
use crate::rees::ReesStructure;
use crate::semigroup::FiniteSemigroup;
use crate::smp::{
    solve_closure, solve_one_block_witness, SmpInstance, SolveReport, DEFAULT_STATE_BUDGET,
};
use crate::words::{shorten_word, shortening_bound};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "subpower",
    about = "Subpower membership toolkit for finite semigroups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit JSON instead of human-readable text.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership for an SMP instance file.
    Solve {
        /// Path to an instance JSON file.
        instance: PathBuf,
        /// Maximum number of closure states to explore.
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Classify the SMP complexity of a semigroup.
    Classify {
        /// Catalog name or path to a semigroup/Rees JSON file.
        input: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build the SMP instance equivalent to a DIMACS CNF formula.
    ReduceSat {
        /// Path to a DIMACS cnf file.
        formula: PathBuf,
        /// Ambient semigroup: catalog name or JSON file path.
        #[arg(long, default_value = "brandt_b2")]
        semigroup: String,
        /// Hardness triple "r,s,t" as element indices; scanned for when
        /// omitted.
        #[arg(long)]
        triple: Option<String>,
        /// Solve the instance and check it against brute-force
        /// satisfiability.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build the SMP instance equivalent to a quantified 3SAT formula.
    ReduceQ3sat {
        /// Path to a q3sat file ("q3sat N M" header, then M clause lines).
        formula: PathBuf,
        /// Ambient semigroup: catalog name or JSON file path.
        #[arg(long, default_value = "brandt_b2_1")]
        semigroup: String,
        /// Triple "s,t,n" as element indices; scanned for when omitted.
        #[arg(long)]
        triple: Option<String>,
        /// Pair lift: "auto" squares the semigroup only when needed.
        #[arg(long, default_value = "auto", value_parser = ["auto", "on", "off"])]
        lift: String,
        /// Solve the instance and check it against the game-tree value.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Print Green's relations of a semigroup.
    Greens {
        /// Catalog name or path to a semigroup/Rees JSON file.
        input: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Shorten a word while preserving its value in every combinatorial
    /// Rees matrix semigroup.
    Shorten {
        /// The word as space-separated 1-based letters, e.g. "1 2 1 2 1".
        #[arg(long)]
        word: String,
        /// Alphabet size; defaults to the largest letter.
        #[arg(long)]
        letters: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// List catalog semigroups, or show one.
    Catalog {
        /// Catalog name; lists all names when omitted.
        name: Option<String>,
        #[command(flatten)]
        output: OutputOpts,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Solve {
            instance,
            budget,
            output,
        } => cmd_solve(&instance, budget, &output),
        Command::Classify { input, output } => cmd_classify(&input, &output),
        Command::ReduceSat {
            formula,
            semigroup,
            triple,
            verify,
            budget,
            output,
        } => cmd_reduce_sat(&formula, &semigroup, triple.as_deref(), verify, budget, &output),
        Command::ReduceQ3sat {
            formula,
            semigroup,
            triple,
            lift,
            verify,
            budget,
            output,
        } => cmd_reduce_q3sat(
            &formula,
            &semigroup,
            triple.as_deref(),
            &lift,
            verify,
            budget,
            &output,
        ),
        Command::Greens { input, output } => cmd_greens(&input, &output),
        Command::Shorten {
            word,
            letters,
            output,
        } => cmd_shorten(&word, letters, &output),
        Command::Catalog { name, output } => cmd_catalog(name.as_deref(), &output),
    }
}

fn require_positive_budget(budget: usize) -> Result<()> {
    if budget == 0 {
        return Err(Error::input("state budget must be positive"));
    }
    Ok(())
}

fn emit(output: &OutputOpts, json: serde_json::Value, text: String) -> Result<()> {
    let body = if output.json {
        serde_json::to_string_pretty(&json)? + "\n"
    } else {
        text
    };
    match &output.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

/// Loads a semigroup from a catalog name or a JSON file (semigroup or Rees
/// format, picked by the presence of a `matrix` field).
fn load_semigroup(input: &str) -> Result<(FiniteSemigroup, Option<ReesStructure>, AmbientSpec)> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        if value.get("matrix").is_some() {
            let rj: ReesJson = serde_json::from_value(value)?;
            let rees = rj.to_structure()?;
            let sg = rees.build()?;
            return Ok((sg, Some(rees), AmbientSpec::Rees(rj)));
        }
        let sj: SemigroupJson = serde_json::from_value(value)?;
        let sg = sj.to_semigroup()?;
        return Ok((sg, None, AmbientSpec::Table(sj)));
    }
    let entry = catalog::entry(input)?;
    Ok((
        entry.semigroup,
        entry.rees,
        AmbientSpec::Catalog(input.to_string()),
    ))
}

fn report_text(report: &SolveReport) -> String {
    let mut out = String::new();
    out.push_str(if report.member {
        "member: yes\n"
    } else {
        "member: no\n"
    });
    match &report.witness {
        Some(w) => {
            let word: Vec<String> = w.word.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("witness: {}\n", word.join(" ")));
        }
        None => out.push_str("witness: none\n"),
    }
    out.push_str(&format!("closure_size: {}\n", report.closure_size));
    out
}

fn solve_report_json(report: &SolveReport) -> serde_json::Value {
    json!({
        "member": report.member,
        "witness": report.witness.as_ref().map(|w| w.word.clone()),
        "closure_size": report.closure_size,
    })
}

fn cmd_solve(instance: &Path, budget: usize, output: &OutputOpts) -> Result<i32> {
    require_positive_budget(budget)?;
    let text = std::fs::read_to_string(instance)?;
    let parsed: InstanceJson = serde_json::from_str(&text)?;
    let (inst, rees) = parsed.to_instance()?;

    // Rees ambients with a one-block matrix and no identity take the
    // quadratic decision procedure; everything else takes the closure
    let report = match rees {
        Some(ref r) if !r.adjoins_identity() && r.one_block().is_some() => {
            let witness = solve_one_block_witness(&inst, r)?;
            SolveReport {
                member: witness.is_some(),
                witness,
                closure_size: 0,
            }
        }
        _ => solve_closure(&inst, budget)?,
    };
    emit(output, solve_report_json(&report), report_text(&report))?;
    Ok(if report.member { 0 } else { 1 })
}

fn cmd_classify(input: &str, output: &OutputOpts) -> Result<i32> {
    let (sg, rees, _) = load_semigroup(input)?;
    let verdict = match rees {
        Some(ref r) if r.adjoins_identity() => classify_rees_identity(r)?,
        Some(ref r) => classify_rees(r)?,
        None => classify_general(&sg),
    };
    let v = verdict.to_json();
    let text = format!(
        "class: {}\nrule: {}\nevidence: {}\n",
        verdict.class.as_str(),
        verdict.theorem,
        serde_json::to_string(&v["evidence"])?
    );
    emit(output, v, text)?;
    Ok(0)
}

fn parse_triple(s: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::input(format!("bad triple component {p:?}")))
        })
        .collect::<Result<_>>()?;
    if parts.len() != 3 {
        return Err(Error::input("triple must have exactly three components"));
    }
    Ok((parts[0], parts[1], parts[2]))
}

fn write_instance(
    inst: &SmpInstance,
    ambient: AmbientSpec,
    lifted: bool,
    output: &OutputOpts,
    extra: serde_json::Value,
) -> Result<()> {
    // a lifted instance lives in the square, not in the named ambient
    let instance_json = if lifted {
        InstanceJson::from_instance(inst)
    } else {
        InstanceJson::with_ambient(inst, ambient)
    };
    let mut v = serde_json::to_value(&instance_json)?;
    if let (Some(obj), Some(em)) = (v.as_object_mut(), extra.as_object()) {
        for (k, val) in em {
            obj.insert(k.clone(), val.clone());
        }
    }
    let text = serde_json::to_string_pretty(&v)? + "\n";
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_reduce_sat(
    formula: &Path,
    semigroup: &str,
    triple: Option<&str>,
    verify: bool,
    budget: usize,
    output: &OutputOpts,
) -> Result<i32> {
    require_positive_budget(budget)?;
    let text = std::fs::read_to_string(formula)?;
    let cnf = CnfFormula::from_dimacs(&text)?;
    let (sg, _, ambient) = load_semigroup(semigroup)?;
    let triple = match triple {
        Some(t) => parse_triple(t)?,
        None => crate::classify::find_nphard_triple(&sg).ok_or_else(|| {
            Error::input("semigroup has no elements r, s, t with rs = st = s and s non-group")
        })?,
    };
    let inst = sat_to_smp(&sg, triple, &cnf)?;

    let mut extra = json!({});
    if verify {
        let satisfiable = cnf.brute_force_sat().is_some();
        let member = solve_closure(&inst, budget)?.member;
        if satisfiable != member {
            return Err(Error::input(format!(
                "equivalence check failed: satisfiable = {satisfiable}, member = {member}"
            )));
        }
        extra = json!({ "verified": { "satisfiable": satisfiable, "member": member } });
    }
    write_instance(&inst, ambient, false, output, extra)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_reduce_q3sat(
    formula: &Path,
    semigroup: &str,
    triple: Option<&str>,
    lift: &str,
    verify: bool,
    budget: usize,
    output: &OutputOpts,
) -> Result<i32> {
    require_positive_budget(budget)?;
    let text = std::fs::read_to_string(formula)?;
    let q3 = Q3SatFormula::parse(&text)?;
    let (sg, _, ambient) = load_semigroup(semigroup)?;
    let triple = match triple {
        Some(t) => parse_triple(t)?,
        None => crate::classify::find_pspace_triple(&sg).ok_or_else(|| {
            Error::input("semigroup has no triple with sts = s, s non-group, sn = s, tn = t")
        })?,
    };
    let (s, t, n) = triple;
    let lifted = match lift {
        "on" => true,
        "off" => false,
        _ => {
            if q3sat_direct_conditions(&sg, s, t, n) {
                false
            } else if pspace_triple_conditions(&sg, s, t, n) {
                true
            } else {
                return Err(Error::input("triple fails the construction's conditions"));
            }
        }
    };
    let inst = q3sat_to_smp(&sg, triple, &q3, lifted)?;

    let mut extra = json!({ "lifted": lifted });
    if verify {
        let truth = q3.eval();
        let member = solve_closure(&inst, budget)?.member;
        if truth != member {
            return Err(Error::input(format!(
                "equivalence check failed: formula = {truth}, member = {member}"
            )));
        }
        extra = json!({ "lifted": lifted, "verified": { "formula": truth, "member": member } });
    }
    write_instance(&inst, ambient, lifted, output, extra)?;
    Ok(0)
}

fn cmd_greens(input: &str, output: &OutputOpts) -> Result<i32> {
    let (sg, _, _) = load_semigroup(input)?;
    let g = sg.greens();
    let mut j_sizes = g.j_class_sizes();
    j_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let v = json!({
        "size": sg.size(),
        "j_class_count": g.j_class_count(),
        "j_class_sizes": j_sizes,
        "r_class_count": g.r_class_count(),
        "l_class_count": g.l_class_count(),
        "h_class_count": g.h_class_count(),
    });
    let sizes: Vec<String> = j_sizes.iter().map(|s| s.to_string()).collect();
    let text = format!(
        "elements: {}\nJ-classes: {} (sizes {})\nR-classes: {}\nL-classes: {}\nH-classes: {}\n",
        sg.size(),
        g.j_class_count(),
        sizes.join(", "),
        g.r_class_count(),
        g.l_class_count(),
        g.h_class_count(),
    );
    emit(output, v, text)?;
    Ok(0)
}

fn cmd_shorten(word: &str, letters: Option<usize>, output: &OutputOpts) -> Result<i32> {
    let parsed: Vec<usize> = word
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::input(format!("bad letter {t:?}")))
                .and_then(|v| {
                    if v == 0 {
                        Err(Error::input("letters are 1-based"))
                    } else {
                        Ok(v - 1)
                    }
                })
        })
        .collect::<Result<_>>()?;
    if parsed.is_empty() {
        return Err(Error::input("word must be nonempty"));
    }
    let max_letter = parsed.iter().max().unwrap() + 1;
    let k = letters.unwrap_or(max_letter);
    if k < max_letter {
        return Err(Error::input(format!(
            "word uses letter {max_letter} beyond the alphabet size {k}"
        )));
    }
    let short = shorten_word(&parsed);
    let display: Vec<String> = short.iter().map(|l| (l + 1).to_string()).collect();
    let v = json!({
        "word": short.iter().map(|l| l + 1).collect::<Vec<_>>(),
        "length": short.len(),
        "bound": shortening_bound(k),
    });
    let text = format!(
        "shortened: {}\nlength: {} (bound {})\n",
        display.join(" "),
        short.len(),
        shortening_bound(k)
    );
    emit(output, v, text)?;
    Ok(0)
}

fn cmd_catalog(name: Option<&str>, output: &OutputOpts) -> Result<i32> {
    match name {
        None => {
            let names = catalog::standard_names();
            let mut rows = Vec::new();
            for n in &names {
                let e = catalog::entry(n)?;
                rows.push(json!({ "name": n, "size": e.semigroup.size() }));
            }
            let text = names
                .iter()
                .map(|n| {
                    let e = catalog::entry(n).unwrap();
                    format!("{n} ({} elements)\n", e.semigroup.size())
                })
                .collect::<String>();
            emit(output, json!(rows), text)?;
        }
        Some(n) => {
            let e = catalog::entry(n)?;
            let sg = &e.semigroup;
            let triple = e.pspace_triple.map(|(s, t, nn)| {
                json!({
                    "s": sg.name(s),
                    "t": sg.name(t),
                    "n": sg.name(nn),
                })
            });
            let v = json!({
                "name": e.name,
                "size": sg.size(),
                "names": sg.names(),
                "table": sg.rows(),
                "identity": sg.identity(),
                "zero": sg.zero(),
                "pspace_triple": triple,
            });
            let mut text = format!("{} ({} elements)\n", e.name, sg.size());
            if let Some((s, t, nn)) = e.pspace_triple {
                text.push_str(&format!(
                    "distinguished triple: s = {}, t = {}, n = {}\n",
                    sg.name(s),
                    sg.name(t),
                    sg.name(nn)
                ));
            }
            emit(output, v, text)?;
        }
    }
    Ok(0)
}

//! Command-line interface.
//!
//! Subcommands: `check`, `represent`, `verify`, `oracle`, `generate`,
//! `obstruct`, `selftest`. Exit codes: 0 for a positive answer, 1 for a
//! negative one (not chordal, quadruple found, verification failed, oracle
//! says no), 2 for usage or internal errors.

use crate::arcs::{construct_representation, ArcError, ArcRep};
use crate::chordal::{alpha_and_cover, is_chordal};
use crate::gen::{derive_seed, random_chordal, GenParams};
use crate::graph::Graph;
use crate::obstruction::{extract_obstruction, find_blocking_quadruple, ObstructionError};
use crate::oracle::{brute_force_alpha, verify_representation, CircularArcOutcome};
use crate::render::arc_svg;
use crate::suites::run_property_suite;
use serde_json::json;
use std::time::Duration;

const USAGE: &str = "usage: chordarc <command> [args]

commands:
  check <file> [--json]                 chordality, independence number,
                                        blocking quadruple, obstruction
  represent <file> [--json P] [--svg P] build and verify an arc model
  verify <file> --rep <json>            check a stored model against a graph
  oracle <file> [--timeout-seconds N]   exhaustive circular-arc recognition
  generate --n N --seed S [--alpha-max A] [--count C] [--tree-size T]
                                        emit random chordal edge lists
  obstruct <file>                       extract an obstruction certificate
  selftest [--trials T] [--seed S]      run every property suite
";

pub fn run(args: &[String]) -> i32 {
    match args.first().map(String::as_str) {
        Some("check") => cmd_check(&args[1..]),
        Some("represent") => cmd_represent(&args[1..]),
        Some("verify") => cmd_verify(&args[1..]),
        Some("oracle") => cmd_oracle(&args[1..]),
        Some("generate") => cmd_generate(&args[1..]),
        Some("obstruct") => cmd_obstruct(&args[1..]),
        Some("selftest") => cmd_selftest(&args[1..]),
        Some("--help") | Some("-h") | Some("help") => {
            print!("{USAGE}");
            0
        }
        _ => {
            eprint!("{USAGE}");
            2
        }
    }
}

fn usage_err(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprint!("{USAGE}");
    2
}

fn load_graph(path: &str) -> Result<Graph, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
    Graph::parse(&text).map_err(|e| format!("cannot parse `{path}`: {e}"))
}

type ParsedArgs = (Vec<String>, Vec<(String, String)>);

/// Flag parser for `--name value` and bare positional arguments.
fn split_flags(args: &[String]) -> Result<ParsedArgs, String> {
    let mut positional = Vec::new();
    let mut flags = Vec::new();
    let mut it = args.iter().peekable();
    while let Some(a) = it.next() {
        if let Some(name) = a.strip_prefix("--") {
            if name == "json" && !matches!(it.peek(), Some(v) if !v.starts_with("--")) {
                // bare --json toggle for `check`
                flags.push((name.to_string(), String::new()));
                continue;
            }
            let value = it
                .next()
                .ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.push((name.to_string(), value.clone()));
        } else {
            positional.push(a.clone());
        }
    }
    Ok((positional, flags))
}

fn flag<'a>(flags: &'a [(String, String)], name: &str) -> Option<&'a str> {
    flags
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, v)| v.as_str())
}

fn cmd_check(args: &[String]) -> i32 {
    let (pos, flags) = match split_flags(args) {
        Ok(x) => x,
        Err(e) => return usage_err(&e),
    };
    let [path] = pos.as_slice() else {
        return usage_err("check takes one graph file");
    };
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(e) => return usage_err(&e),
    };
    let peo = is_chordal(&g);
    let chordal = peo.is_some();
    let alpha: Option<usize> = match &peo {
        Some(peo) => alpha_and_cover(&g, peo).ok().map(|(ind, _)| ind.len()),
        None if g.n() <= 20 => Some(brute_force_alpha(&g)),
        None => None,
    };
    let bq = find_blocking_quadruple(&g);
    let cert = bq
        .as_ref()
        .and_then(|bq| extract_obstruction(&g, bq).ok());
    if flag(&flags, "json").is_some() {
        let out = json!({
            "chordal": chordal,
            "alpha": alpha,
            "bq": bq.as_ref().map(|b| b.quad.map(|v| g.label(v).to_string())),
            "obstruction": cert.as_ref().map(|c| c.to_json(&g)),
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("chordal: {chordal}");
        match alpha {
            Some(a) => println!("alpha: {a}"),
            None => println!("alpha: unknown (graph too large for the exact search)"),
        }
        match &bq {
            Some(b) => println!(
                "bq: {}",
                b.quad.map(|v| g.label(v).to_string()).join(" ")
            ),
            None => println!("bq: none"),
        }
        if let Some(c) = &cert {
            println!("obstruction: {}", c.family);
        }
    }
    if chordal && bq.is_none() {
        0
    } else {
        1
    }
}

fn cmd_represent(args: &[String]) -> i32 {
    let (pos, flags) = match split_flags(args) {
        Ok(x) => x,
        Err(e) => return usage_err(&e),
    };
    let [path] = pos.as_slice() else {
        return usage_err("represent takes one graph file");
    };
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(e) => return usage_err(&e),
    };
    let rep = match construct_representation(&g) {
        Ok(rep) => rep,
        Err(e @ ArcError::ProofViolation(_)) => {
            eprintln!("internal error: {e}");
            return 2;
        }
        Err(e) => {
            eprintln!("cannot represent: {e}");
            return 1;
        }
    };
    let json_text =
        serde_json::to_string_pretty(&rep.to_json(&g)).expect("serializable");
    match flag(&flags, "json") {
        Some(path) if !path.is_empty() => {
            if let Err(e) = std::fs::write(path, format!("{json_text}\n")) {
                eprintln!("cannot write `{path}`: {e}");
                return 2;
            }
        }
        _ => println!("{json_text}"),
    }
    if let Some(path) = flag(&flags, "svg") {
        if let Err(e) = std::fs::write(path, arc_svg(&g, &rep)) {
            eprintln!("cannot write `{path}`: {e}");
            return 2;
        }
    }
    0
}

fn cmd_verify(args: &[String]) -> i32 {
    let (pos, flags) = match split_flags(args) {
        Ok(x) => x,
        Err(e) => return usage_err(&e),
    };
    let [path] = pos.as_slice() else {
        return usage_err("verify takes one graph file and --rep");
    };
    let Some(rep_path) = flag(&flags, "rep") else {
        return usage_err("verify needs --rep <json file>");
    };
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(e) => return usage_err(&e),
    };
    let rep_text = match std::fs::read_to_string(rep_path) {
        Ok(t) => t,
        Err(e) => return usage_err(&format!("cannot read `{rep_path}`: {e}")),
    };
    let value: serde_json::Value = match serde_json::from_str(&rep_text) {
        Ok(v) => v,
        Err(e) => return usage_err(&format!("cannot parse `{rep_path}`: {e}")),
    };
    let rep = match ArcRep::from_json(&g, &value) {
        Ok(r) => r,
        Err(e) => return usage_err(&format!("malformed representation: {e}")),
    };
    match verify_representation(&g, &rep) {
        Ok(report) if report.equal => {
            println!("equal: the model represents the graph");
            0
        }
        Ok(report) => {
            for (u, v) in &report.missing {
                println!("missing: {} {}", g.label(*u), g.label(*v));
            }
            for (u, v) in &report.extra {
                println!("extra: {} {}", g.label(*u), g.label(*v));
            }
            1
        }
        Err(e) => usage_err(&format!("malformed representation: {e}")),
    }
}

fn cmd_oracle(args: &[String]) -> i32 {
    let (pos, flags) = match split_flags(args) {
        Ok(x) => x,
        Err(e) => return usage_err(&e),
    };
    let [path] = pos.as_slice() else {
        return usage_err("oracle takes one graph file");
    };
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(e) => return usage_err(&e),
    };
    let secs: u64 = match flag(&flags, "timeout-seconds") {
        None => 600,
        Some(v) => match v.parse() {
            Ok(s) => s,
            Err(_) => return usage_err("--timeout-seconds needs an integer"),
        },
    };
    match crate::oracle::brute_force_circular_arc(&g, Duration::from_secs(secs)) {
        CircularArcOutcome::Yes(model) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&model.to_json(&g)).expect("serializable")
            );
            0
        }
        CircularArcOutcome::No => {
            println!("not a circular-arc graph (exhaustive)");
            1
        }
        CircularArcOutcome::Timeout => {
            eprintln!("oracle timed out after {secs} s");
            2
        }
    }
}

fn cmd_generate(args: &[String]) -> i32 {
    let (pos, flags) = match split_flags(args) {
        Ok(x) => x,
        Err(e) => return usage_err(&e),
    };
    if !pos.is_empty() {
        return usage_err("generate takes only flags");
    }
    let Some(n) = flag(&flags, "n").and_then(|v| v.parse::<usize>().ok()) else {
        return usage_err("generate needs --n <count>");
    };
    let Some(seed) = flag(&flags, "seed").and_then(|v| v.parse::<u64>().ok()) else {
        return usage_err("generate needs --seed <u64>");
    };
    if n == 0 {
        return usage_err("--n must be positive");
    }
    let alpha_max = match flag(&flags, "alpha-max") {
        None => None,
        Some(v) => match v.parse::<usize>() {
            Ok(a) => Some(a),
            Err(_) => return usage_err("--alpha-max needs an integer"),
        },
    };
    let count = match flag(&flags, "count") {
        None => 1,
        Some(v) => match v.parse::<usize>() {
            Ok(c) if c > 0 => c,
            _ => return usage_err("--count needs a positive integer"),
        },
    };
    let tree_size = flag(&flags, "tree-size").and_then(|v| v.parse::<usize>().ok());
    for i in 0..count {
        let mut params = GenParams::new(n, derive_seed(seed, i as u64));
        params.alpha_max = alpha_max;
        if let Some(ts) = tree_size {
            params.tree_size = ts.max(1);
            params.subtree_mean = (ts / 3).max(1);
        }
        match random_chordal(&params) {
            Ok(g) => {
                if count > 1 {
                    println!("# graph {i}");
                }
                print!("{}", g.to_edge_list());
                if count > 1 {
                    println!();
                }
            }
            Err(e) => {
                eprintln!("generation failed: {e}");
                return 2;
            }
        }
    }
    0
}

fn cmd_obstruct(args: &[String]) -> i32 {
    let (pos, _) = match split_flags(args) {
        Ok(x) => x,
        Err(e) => return usage_err(&e),
    };
    let [path] = pos.as_slice() else {
        return usage_err("obstruct takes one graph file");
    };
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(e) => return usage_err(&e),
    };
    let Some(bq) = find_blocking_quadruple(&g) else {
        println!("no blocking quadruple");
        return 1;
    };
    match extract_obstruction(&g, &bq) {
        Ok(cert) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&cert.to_json(&g)).expect("serializable")
            );
            0
        }
        Err(e @ ObstructionError::NotNearlyChordal) => {
            eprintln!("cannot certify: {e}");
            1
        }
        Err(e) => {
            eprintln!("internal error: {e}");
            2
        }
    }
}

fn cmd_selftest(args: &[String]) -> i32 {
    let (pos, flags) = match split_flags(args) {
        Ok(x) => x,
        Err(e) => return usage_err(&e),
    };
    if !pos.is_empty() {
        return usage_err("selftest takes only flags");
    }
    let trials = match flag(&flags, "trials") {
        None => 25,
        Some(v) => match v.parse::<usize>() {
            Ok(t) => t,
            Err(_) => return usage_err("--trials needs an integer"),
        },
    };
    let seed = match flag(&flags, "seed") {
        None => 7,
        Some(v) => match v.parse::<u64>() {
            Ok(s) => s,
            Err(_) => return usage_err("--seed needs a u64"),
        },
    };
    let mut all_pass = true;
    for name in crate::suites::SUITE_NAMES {
        let report = run_property_suite(name, trials, seed).expect("names are known");
        print!("{}", report.render());
        all_pass &= report.pass();
    }
    if all_pass {
        0
    } else {
        1
    }
}

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use bimenger::appendage::compute_appendage;
use bimenger::certificate::{
    check, edge_menger_certificate, parse_signed, vertex_menger_certificate, Certificate, Provenance, WalkCert,
};
use bimenger::connectivity::{is_circularly_connected, is_strongly_connected};
use bimenger::format::{parse, parse_paths, serialize, Document};
use bimenger::generators::{gen_edge_counterexample, gen_grid, random_bidirected, random_signed_set};
use bimenger::menger_edge::{edge_menger_with, EdgeMengerOptions, EdgeMengerOutcome};
use bimenger::menger_vertex::{vertex_menger_with, VertexMengerOptions, VertexMengerOutcome};
use bimenger::oracle::{brute_menger_edge, brute_menger_vertex, OracleReport};
use bimenger::pathfinder::{closed_trail_at, find_signed_path, find_signed_trail, unclean_witness};
use bimenger::{fixtures, BidirectedGraph, EdgeSet, Error, SignedVertexSet, VertexId, Walk};

#[derive(Parser)]
#[command(name = "bimenger", version, about = "Disjoint paths, cleanness and connectivity in bidirected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph document in the `bgf 1` format.
    #[arg(long, value_name = "FILE")]
    graph: String,
    /// Print the JSON certificate instead of text.
    #[arg(long)]
    json: bool,
    /// Record wall-clock timings in the certificate.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct Endpoints {
    #[command(flatten)]
    input: Input,
    /// Signed start, e.g. `u:-`.
    #[arg(long, value_name = "V:SIGN")]
    from: String,
    /// Signed end, e.g. `w:+`.
    #[arg(long, value_name = "V:SIGN")]
    to: String,
}

#[derive(Args)]
struct MengerArgs {
    #[command(flatten)]
    input: Input,
    /// Set name (vertex Menger) or vertex name (edge Menger).
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
    /// Given disjoint paths; defaults to the `path` lines of the graph document.
    #[arg(long, value_name = "FILE")]
    paths: Option<String>,
    /// Use the first N given paths, or without given paths, grow a family of
    /// N paths by repeated augmentation first.
    #[arg(long, value_name = "N")]
    k: Option<usize>,
    #[arg(long)]
    no_precondition_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Vertex,
    Edge,
}

#[derive(Subcommand)]
enum GenKind {
    /// The grid family with its sets `X` and `Y`.
    Grid {
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// The vertex-split graph of the grid, with terminals `x` and `y`.
    EdgeCounterexample {
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// A random graph with random sets `X` and `Y`.
    Random {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A named fixture.
    Fixture { name: String },
}

#[derive(Subcommand)]
enum Command {
    /// Find a path between two signed vertices.
    Paths(Endpoints),
    /// Find a trail between two signed vertices.
    Trail(Endpoints),
    /// Decide whether a signed vertex set is clean.
    Clean {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: String,
    },
    /// Decide whether a vertex lies on no closed trail.
    EdgeClean {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: String,
    },
    /// Strong and circular connectivity.
    Connectivity {
        #[command(flatten)]
        input: Input,
    },
    /// The appendage of the first given path at its start vertex.
    Appendage {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: String,
        #[arg(long, value_name = "FILE")]
        paths: Option<String>,
        #[arg(long)]
        no_precondition_check: bool,
    },
    /// k+1 edge-disjoint x-y paths or k separating edges.
    MengerEdge(MengerArgs),
    /// k+1 vertex-disjoint X-Y paths or k separating vertices.
    MengerVertex(MengerArgs),
    /// Emit a generated graph document.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Brute-force disjoint path packing and separators, or a random
    /// differential run against the algorithms when no graph is given.
    Oracle {
        #[arg(long, value_name = "FILE")]
        graph: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long, value_enum, default_value = "vertex")]
        mode: Mode,
        #[arg(long, default_value_t = 16)]
        bound: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        json: bool,
    },
    /// Re-validate a JSON certificate against a graph document.
    Check {
        #[arg(long, value_name = "FILE")]
        graph: String,
        #[arg(long, value_name = "FILE")]
        cert: String,
    },
}

enum Fail {
    Usage(String),
    /// Precondition failure, with a certificate carrying the witness.
    Precondition(String, Option<Certificate>, bool),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Run = Result<u8, Fail>;

fn read(path: &str) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{path}: {e}")))
}

fn load(path: &str) -> Result<Document, Fail> {
    parse(&read(path)?).map_err(|e| Fail::Usage(format!("{path}: {e}")))
}

fn vertex(g: &BidirectedGraph, name: &str) -> Result<VertexId, Fail> {
    g.vertex_by_name(name).ok_or_else(|| Fail::Usage(format!("unknown vertex `{name}`")))
}

fn set<'a>(doc: &'a Document, name: &str) -> Result<&'a SignedVertexSet, Fail> {
    doc.set(name).map_err(Fail::from)
}

fn given_paths(doc: &Document, file: Option<&str>) -> Result<Vec<Walk>, Fail> {
    match file {
        Some(f) => parse_paths(&doc.graph, &read(f)?).map_err(|e| Fail::Usage(format!("{f}: {e}"))),
        None => Ok(doc.paths.clone()),
    }
}

fn provenance(algorithm: &str, input: &Input, start: Instant) -> Provenance {
    Provenance {
        algorithm: algorithm.into(),
        recursion_depth: None,
        timings_ms: timings(input.timings, start),
    }
}

fn timings(on: bool, start: Instant) -> Option<BTreeMap<String, f64>> {
    on.then(|| BTreeMap::from([("total".to_string(), start.elapsed().as_secs_f64() * 1e3)]))
}

fn emit(g: &BidirectedGraph, cert: &Certificate, json: bool) {
    if json {
        print!("{}", cert.to_json());
        return;
    }
    println!("{}: {}", cert.command, cert.outcome);
    for w in &cert.paths {
        println!("  path {}", walk_text(g, w));
    }
    if !cert.separator.is_empty() {
        println!("  separator {}", cert.separator.join(" "));
    }
    if cert.command == "appendage" {
        println!("  edges {}", cert.edges.join(" "));
    }
    for (k, v) in &cert.flags {
        println!("  {k}: {v}");
    }
    if let Some(t) = &cert.provenance.timings_ms {
        for (k, v) in t {
            println!("  time {k}: {v:.3} ms");
        }
    }
}

fn walk_text(g: &BidirectedGraph, w: &WalkCert) -> String {
    w.resolve(g).map(|w| w.display(g)).unwrap_or_else(|_| w.vertices.join(" "))
}

fn precondition(command: &str, message: String, x: &str, y: Option<&str>, g: &BidirectedGraph, witness: Option<&Walk>, json: bool) -> Fail {
    let cert = Certificate {
        command: command.into(),
        outcome: "precondition".into(),
        x: Some(x.into()),
        y: y.map(Into::into),
        paths: witness.iter().map(|w| WalkCert::new(g, w)).collect(),
        provenance: Provenance {
            algorithm: "precondition check".into(),
            ..Default::default()
        },
        ..Default::default()
    };
    Fail::Precondition(message, Some(cert), json)
}

fn search(e: &Endpoints, trail: bool) -> Run {
    let start = Instant::now();
    let doc = load(&e.input.graph)?;
    let g = &doc.graph;
    let from = parse_signed(g, &e.from).map_err(Fail::Usage)?;
    let to = parse_signed(g, &e.to).map_err(Fail::Usage)?;
    let found = if trail {
        find_signed_trail(g, from, to)?
    } else {
        find_signed_path(g, from, to, &EdgeSet::empty(g.edge_count()))?
    };
    let command = if trail { "trail" } else { "paths" };
    let cert = Certificate {
        command: command.into(),
        outcome: if found.is_some() { "found" } else { "none" }.into(),
        from: Some(e.from.clone()),
        to: Some(e.to.clone()),
        paths: found.iter().map(|w| WalkCert::new(g, w)).collect(),
        provenance: provenance(if trail { "line graph reduction" } else { "matching reduction" }, &e.input, start),
        ..Default::default()
    };
    emit(g, &cert, e.input.json);
    Ok(if found.is_some() { 0 } else { 1 })
}

fn clean(input: &Input, x: &str) -> Run {
    let start = Instant::now();
    let doc = load(&input.graph)?;
    let g = &doc.graph;
    let witness = unclean_witness(g, set(&doc, x)?);
    let cert = Certificate {
        command: "clean".into(),
        outcome: witness.is_none().to_string(),
        x: Some(x.into()),
        paths: witness.iter().map(|w| WalkCert::new(g, w)).collect(),
        provenance: provenance("path search between set members", input, start),
        ..Default::default()
    };
    emit(g, &cert, input.json);
    Ok(witness.is_some() as u8)
}

fn edge_clean(input: &Input, x: &str) -> Run {
    let start = Instant::now();
    let doc = load(&input.graph)?;
    let g = &doc.graph;
    let witness = closed_trail_at(g, vertex(g, x)?)?;
    let cert = Certificate {
        command: "edge-clean".into(),
        outcome: witness.is_none().to_string(),
        x: Some(x.into()),
        paths: witness.iter().map(|w| WalkCert::new(g, w)).collect(),
        provenance: provenance("line graph reduction", input, start),
        ..Default::default()
    };
    emit(g, &cert, input.json);
    Ok(witness.is_some() as u8)
}

fn connectivity(input: &Input) -> Run {
    let start = Instant::now();
    let doc = load(&input.graph)?;
    let g = &doc.graph;
    let strong = is_strongly_connected(g);
    let circular = is_circularly_connected(g);
    if strong != circular {
        return Err(Fail::Usage("internal error: strong and circular connectivity disagree".into()));
    }
    let cert = Certificate {
        command: "connectivity".into(),
        outcome: strong.to_string(),
        flags: BTreeMap::from([
            ("strongly-connected".to_string(), strong),
            ("circularly-connected".to_string(), circular),
        ]),
        provenance: provenance("signed path queries", input, start),
        ..Default::default()
    };
    emit(g, &cert, input.json);
    Ok(!strong as u8)
}

fn appendage(input: &Input, x: &str, paths: Option<&str>, no_check: bool) -> Run {
    let start = Instant::now();
    let doc = load(&input.graph)?;
    let g = &doc.graph;
    let xv = vertex(g, x)?;
    let base = given_paths(&doc, paths)?
        .into_iter()
        .next()
        .ok_or_else(|| Fail::Usage("appendage needs a base path".into()))?;
    if !no_check {
        if let Some(w) = closed_trail_at(g, xv)? {
            let msg = format!("`{x}` lies on the closed trail {}", w.display(g));
            return Err(precondition("appendage", msg, x, None, g, Some(&w), input.json));
        }
    }
    let a = compute_appendage(g, &base, xv)?;
    let mut edges: Vec<String> = a.edges.iter().map(|e| g.edge_name(e).to_string()).collect();
    edges.sort();
    let cert = Certificate {
        command: "appendage".into(),
        outcome: "appendage".into(),
        x: Some(x.into()),
        given: vec![WalkCert::new(g, &base)],
        edges,
        provenance: provenance("reverse edges and ear trails", input, start),
        ..Default::default()
    };
    emit(g, &cert, input.json);
    Ok(0)
}

/// The starting family: the first `k` given paths, or `k` rounds of
/// augmentation from nothing. `Err` carries an early separator outcome.
fn family<T>(
    given: Vec<Walk>,
    explicit: bool,
    k: Option<usize>,
    mut step: impl FnMut(&[Walk]) -> Result<(Result<Vec<Walk>, T>, usize), Fail>,
) -> Result<Result<Vec<Walk>, (Vec<Walk>, T, usize)>, Fail> {
    let Some(k) = k else { return Ok(Ok(given)) };
    if explicit || !given.is_empty() {
        if k > given.len() {
            return Err(Fail::Usage(format!("--k {k} but only {} paths given", given.len())));
        }
        return Ok(Ok(given[..k].to_vec()));
    }
    let mut paths = Vec::new();
    while paths.len() < k {
        match step(&paths)? {
            (Ok(next), _) => paths = next,
            (Err(sep), depth) => return Ok(Err((paths, sep, depth))),
        }
    }
    Ok(Ok(paths))
}

fn menger_vertex(a: &MengerArgs) -> Run {
    let start = Instant::now();
    let doc = load(&a.input.graph)?;
    let g = &doc.graph;
    let (x, y) = (set(&doc, &a.x)?, set(&doc, &a.y)?);
    let options = VertexMengerOptions {
        check_precondition: !a.no_precondition_check,
    };
    let run = |paths: &[Walk]| -> Result<_, Fail> {
        vertex_menger_with(g, x, y, paths, options).map_err(|e| match e {
            Error::Precondition { message, witness } => {
                precondition("menger-vertex", message, &a.x, Some(&a.y), g, witness.as_ref(), a.input.json)
            }
            e => Fail::from(e),
        })
    };
    let given = given_paths(&doc, a.paths.as_deref())?;
    let first = family(given, a.paths.is_some(), a.k, |ps| {
        let r = run(ps)?;
        Ok((
            match r.outcome {
                VertexMengerOutcome::Paths(p) => Ok(p),
                VertexMengerOutcome::Separator(s) => Err(s),
            },
            r.recursion_depth,
        ))
    })?;
    let (paths, report) = match first {
        Ok(paths) => {
            let r = run(&paths)?;
            (paths, r)
        }
        Err((paths, s, depth)) => (
            paths,
            bimenger::menger_vertex::VertexMengerReport {
                outcome: VertexMengerOutcome::Separator(s),
                recursion_depth: depth,
                trivial: vec![],
            },
        ),
    };
    let mut cert = vertex_menger_certificate(g, &a.x, &a.y, &paths, &report);
    cert.provenance.timings_ms = timings(a.input.timings, start);
    emit(g, &cert, a.input.json);
    Ok(matches!(report.outcome, VertexMengerOutcome::Separator(_)) as u8)
}

fn menger_edge(a: &MengerArgs) -> Run {
    let start = Instant::now();
    let doc = load(&a.input.graph)?;
    let g = &doc.graph;
    let (x, y) = (vertex(g, &a.x)?, vertex(g, &a.y)?);
    let options = EdgeMengerOptions {
        check_precondition: !a.no_precondition_check,
    };
    let run = |paths: &[Walk]| -> Result<_, Fail> {
        edge_menger_with(g, x, y, paths, options).map_err(|e| match e {
            Error::Precondition { message, witness } => {
                precondition("menger-edge", message, &a.x, Some(&a.y), g, witness.as_ref(), a.input.json)
            }
            e => Fail::from(e),
        })
    };
    let given = given_paths(&doc, a.paths.as_deref())?;
    let first = family(given, a.paths.is_some(), a.k, |ps| {
        let r = run(ps)?;
        Ok((
            match r.outcome {
                EdgeMengerOutcome::Paths(p) => Ok(p),
                EdgeMengerOutcome::Separator(s) => Err(s),
            },
            r.recursion_depth,
        ))
    })?;
    let (paths, report) = match first {
        Ok(paths) => {
            let r = run(&paths)?;
            (paths, r)
        }
        Err((paths, s, depth)) => (
            paths,
            bimenger::menger_edge::EdgeMengerReport {
                outcome: EdgeMengerOutcome::Separator(s),
                recursion_depth: depth,
            },
        ),
    };
    let mut cert = edge_menger_certificate(g, x, y, &paths, &report);
    cert.provenance.timings_ms = timings(a.input.timings, start);
    emit(g, &cert, a.input.json);
    Ok(matches!(report.outcome, EdgeMengerOutcome::Separator(_)) as u8)
}

fn generate(kind: &GenKind) -> Run {
    let doc = match kind {
        GenKind::Grid { k } => {
            let (g, x, y) = gen_grid(*k)?;
            let mut doc = Document::new(g);
            doc.sets.insert("X".into(), x);
            doc.sets.insert("Y".into(), y);
            doc
        }
        GenKind::EdgeCounterexample { k } => {
            let (g, x, y) = gen_edge_counterexample(*k)?;
            println!("# terminals {} {}", g.vertex_name(x), g.vertex_name(y));
            Document::new(g)
        }
        GenKind::Random { n, m, seed } => {
            let mut rng = StdRng::seed_from_u64(*seed);
            let g = random_bidirected(&mut rng, *n, *m);
            let vs: Vec<VertexId> = g.vertices().collect();
            let x = random_signed_set(&mut rng, &vs, 2.min(2 * vs.len()));
            let y = random_signed_set(&mut rng, &vs, 2.min(2 * vs.len()));
            let mut doc = Document::new(g);
            doc.sets.insert("X".into(), x);
            doc.sets.insert("Y".into(), y);
            doc
        }
        GenKind::Fixture { name } => {
            let f = fixtures::by_name(name).ok_or_else(|| Fail::Usage(format!("unknown fixture `{name}`")))?;
            Document {
                graph: f.graph,
                sets: f.sets,
                paths: vec![],
            }
        }
    };
    print!("{}", serialize(&doc));
    Ok(0)
}

fn report_json(g: &BidirectedGraph, r: &OracleReport, mode: Mode) -> serde_json::Value {
    let separator: Vec<&str> = r
        .separator
        .iter()
        .map(|&i| match mode {
            Mode::Vertex => g.vertex_name(VertexId(i)),
            Mode::Edge => g.edge_name(bimenger::EdgeId(i)),
        })
        .collect();
    let paths: Vec<String> = r.paths.iter().map(|p| p.display(g)).collect();
    json!({
        "max_disjoint": r.max_disjoint,
        "min_separator": r.min_separator,
        "paths": paths,
        "separator": separator,
    })
}

#[allow(clippy::too_many_arguments)]
fn oracle(
    graph: Option<&str>,
    x: Option<&str>,
    y: Option<&str>,
    mode: Mode,
    bound: usize,
    seed: u64,
    count: usize,
    json_out: bool,
) -> Run {
    let Some(path) = graph else { return differential(seed, count, json_out) };
    let doc = load(path)?;
    let g = &doc.graph;
    let (x, y) = (
        x.ok_or_else(|| Fail::Usage("--x is required with --graph".into()))?,
        y.ok_or_else(|| Fail::Usage("--y is required with --graph".into()))?,
    );
    let r = match mode {
        Mode::Vertex => brute_menger_vertex(g, set(&doc, x)?, set(&doc, y)?, bound)?,
        Mode::Edge => brute_menger_edge(g, vertex(g, x)?, vertex(g, y)?, bound)?,
    };
    let out = report_json(g, &r, mode);
    if json_out {
        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    } else {
        println!("max disjoint paths: {}", r.max_disjoint);
        println!("min separator: {}", r.min_separator);
        for p in out["paths"].as_array().expect("array") {
            println!("  path {}", p.as_str().expect("string"));
        }
        println!("  separator {}", out["separator"].as_array().expect("array").iter().map(|s| s.as_str().unwrap()).collect::<Vec<_>>().join(" "));
    }
    Ok(0)
}

/// Iterates both Menger algorithms on random small instances and compares
/// the number of paths reached with the brute-force packing.
fn differential(seed: u64, count: usize, json_out: bool) -> Run {
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut vertex_runs, mut edge_runs, mut bad) = (0, 0, Vec::new());
    for i in 0..count {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=10);
        let g = random_bidirected(&mut rng, n, m);
        let vs: Vec<VertexId> = g.vertices().collect();
        let (kx, ky) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let x = random_signed_set(&mut rng, &vs, kx);
        let y = random_signed_set(&mut rng, &vs, ky);
        if unclean_witness(&g, &x).is_none() {
            vertex_runs += 1;
            let want = brute_menger_vertex(&g, &x, &y, 16)?.max_disjoint;
            let mut paths = Vec::new();
            let got = loop {
                match vertex_menger_with(&g, &x, &y, &paths, VertexMengerOptions::default())?.outcome {
                    VertexMengerOutcome::Paths(p) => paths = p,
                    VertexMengerOutcome::Separator(_) => break paths.len(),
                }
            };
            if got != want {
                bad.push(format!("instance {i}: vertex Menger reached {got}, oracle {want}"));
            }
        }
        let (a, b) = (VertexId(rng.gen_range(0..n)), VertexId(rng.gen_range(0..n)));
        if a != b && closed_trail_at(&g, a)?.is_none() {
            edge_runs += 1;
            let want = brute_menger_edge(&g, a, b, 16)?.max_disjoint;
            let mut paths = Vec::new();
            let got = loop {
                match edge_menger_with(&g, a, b, &paths, EdgeMengerOptions::default())?.outcome {
                    EdgeMengerOutcome::Paths(p) => paths = p,
                    EdgeMengerOutcome::Separator(_) => break paths.len(),
                }
            };
            if got != want {
                bad.push(format!("instance {i}: edge Menger reached {got}, oracle {want}"));
            }
        }
    }
    if json_out {
        let out = json!({
            "seed": seed,
            "instances": count,
            "vertex_runs": vertex_runs,
            "edge_runs": edge_runs,
            "discrepancies": bad,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    } else {
        println!("{count} instances: {vertex_runs} vertex runs, {edge_runs} edge runs, {} discrepancies", bad.len());
        for b in &bad {
            println!("  {b}");
        }
    }
    Ok(!bad.is_empty() as u8)
}

fn check_cert(graph: &str, cert: &str) -> Run {
    let doc = load(graph)?;
    let cert = Certificate::from_json(&read(cert)?).map_err(|e| Fail::Usage(format!("{cert}: {e}")))?;
    match check(&doc, &cert) {
        Ok(()) => {
            println!("certificate valid");
            Ok(0)
        }
        Err(e) => {
            println!("certificate invalid: {e}");
            Ok(1)
        }
    }
}

fn run(cli: Cli) -> Run {
    match &cli.command {
        Command::Paths(e) => search(e, false),
        Command::Trail(e) => search(e, true),
        Command::Clean { input, x } => clean(input, x),
        Command::EdgeClean { input, x } => edge_clean(input, x),
        Command::Connectivity { input } => connectivity(input),
        Command::Appendage {
            input,
            x,
            paths,
            no_precondition_check,
        } => appendage(input, x, paths.as_deref(), *no_precondition_check),
        Command::MengerEdge(a) => menger_edge(a),
        Command::MengerVertex(a) => menger_vertex(a),
        Command::Gen { kind } => generate(kind),
        Command::Oracle {
            graph,
            x,
            y,
            mode,
            bound,
            seed,
            count,
            json,
        } => oracle(graph.as_deref(), x.as_deref(), y.as_deref(), *mode, *bound, *seed, *count, *json),
        Command::Check { graph, cert } => check_cert(graph, cert),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Fail::Precondition(msg, cert, json_out)) => {
            eprintln!("precondition failed: {msg}");
            if let Some(cert) = cert {
                if json_out {
                    print!("{}", cert.to_json());
                } else {
                    for w in &cert.paths {
                        println!("witness {}", w.vertices.join(" "));
                    }
                }
            }
            ExitCode::from(2)
        }
    }
}

//! Command line front end for the brauer library.
//!
//! Exit codes: 0 for success and positive verdicts, 1 for negative verdicts
//! (not isomorphic, not reached, inadmissible, invariants differ), 2 for
//! usage, parse, and domain errors.

use anyhow::{anyhow, bail, Context, Result};
use brauer::{
    admissible_cut, algebra_dimension, check_cut, check_main_theorem, enumerate_admissible_cuts,
    gentle_check, gentle_quotient_of, graded_multi_move, graded_quiver_of, graded_sector_move,
    invariant_report, iota_sigma_commutes, is_isomorphic, kauer_move, parse, parse_cut_file,
    parse_labels_file, quiver_of, reach, reach_labeled, relations_of, resolve_cut_entries,
    serialize, BrauerGraph, GradedBrauerGraph, Grading, HalfEdgeId, MoveKind, ParsedGraph, Quiver,
    Sector,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "brauer",
    version,
    about = "Brauer graphs: generalized Kauer moves, quivers, relations, invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a graph file and report its shape
    Validate { file: PathBuf },
    /// Structural summary of a graph
    Info { file: PathBuf },
    /// Apply the generalized move at a pairing-stable subset
    Move {
        file: PathBuf,
        #[command(flatten)]
        subset: SubsetArgs,
    },
    /// Apply graded moves; the file must carry a grading
    GradedMove {
        file: PathBuf,
        #[command(flatten)]
        subset: SubsetArgs,
        /// Single sector START,RUN instead of the full multi move
        #[arg(long, value_name = "TOKEN,RUN")]
        sector: Option<String>,
        /// Move every maximal sector of the subset (the default)
        #[arg(long, conflicts_with = "sector")]
        all: bool,
    },
    /// Print the quiver of the graph algebra
    Quiver {
        file: PathBuf,
        /// Emit Graphviz DOT instead of text lines
        #[arg(long)]
        dot: bool,
        /// Arrow label file with SOURCE=LABEL lines
        #[arg(long, value_name = "FILE")]
        labels: Option<PathBuf>,
    },
    /// Print the relations of the graph algebra
    Relations {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        labels: Option<PathBuf>,
    },
    /// Dimension of the graph algebra
    Dimension { file: PathBuf },
    /// Admissible cuts: list them, check one, or print the gentle quotient
    Cut {
        file: PathBuf,
        /// Check the cut in FILE (one arrow label or source token per line)
        #[arg(long, value_name = "FILE", conflicts_with_all = ["gentle", "list"])]
        check: Option<PathBuf>,
        /// Print the gentle quotient by the cut in FILE
        #[arg(long, value_name = "FILE", conflicts_with = "list")]
        gentle: Option<PathBuf>,
        /// Enumerate all admissible cuts
        #[arg(long)]
        list: bool,
        #[arg(long, value_name = "FILE")]
        labels: Option<PathBuf>,
    },
    /// Decide isomorphism of two graphs and print a witness
    Iso { left: PathBuf, right: PathBuf },
    /// Compare the move invariants of two graphs
    Compare { left: PathBuf, right: PathBuf },
    /// Breadth-first search for a move sequence between two graphs
    Reach {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Moves::Generalized)]
        moves: Moves,
        /// Distinct graphs to explore before giving up
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Match graphs as labeled data instead of up to isomorphism
        #[arg(long)]
        labeled: bool,
    },
    /// Check cut transport through the move at a subset
    CheckTheorem {
        file: PathBuf,
        #[command(flatten)]
        subset: SubsetArgs,
    },
}

#[derive(Args)]
struct SubsetArgs {
    /// Comma-separated edge names
    #[arg(
        long,
        visible_alias = "subset",
        value_name = "E,E",
        conflicts_with = "halfedges"
    )]
    edges: Option<String>,
    /// Comma-separated half-edge tokens, closed under the pairing
    #[arg(long, value_name = "T,T")]
    halfedges: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Moves {
    Generalized,
    Standard,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

const PASS: ExitCode = ExitCode::SUCCESS;
const MISS: ExitCode = ExitCode::FAILURE;

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Info { file } => info(&file),
        Command::Move { file, subset } => plain_move(&file, &subset),
        Command::GradedMove {
            file,
            subset,
            sector,
            all: _,
        } => graded_move(&file, &subset, sector.as_deref()),
        Command::Quiver { file, dot, labels } => quiver(&file, dot, labels.as_deref()),
        Command::Relations { file, labels } => relations(&file, labels.as_deref()),
        Command::Dimension { file } => {
            let doc = load(&file)?;
            println!("{}", algebra_dimension(&doc.graph));
            Ok(PASS)
        }
        Command::Cut {
            file,
            check,
            gentle,
            list,
            labels,
        } => cut(
            &file,
            check.as_deref(),
            gentle.as_deref(),
            list,
            labels.as_deref(),
        ),
        Command::Iso { left, right } => iso(&left, &right),
        Command::Compare { left, right } => compare(&left, &right),
        Command::Reach {
            source,
            target,
            depth,
            moves,
            budget,
            labeled,
        } => run_reach(&source, &target, depth, moves, budget, labeled),
        Command::CheckTheorem { file, subset } => check_theorem(&file, &subset),
    }
}

fn load(path: &Path) -> Result<ParsedGraph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_labels(path: &Path) -> Result<BTreeMap<String, String>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_labels_file(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_cut_entries(path: &Path) -> Result<Vec<String>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_cut_file(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn resolve_subset(g: &BrauerGraph, args: &SubsetArgs) -> Result<BTreeSet<HalfEdgeId>> {
    let mut out = BTreeSet::new();
    if let Some(edges) = &args.edges {
        for name in edges.split(',').filter(|s| !s.is_empty()) {
            let (a, b) = g
                .resolve_edge(name)
                .ok_or_else(|| anyhow!("unknown edge {name}"))?;
            out.insert(a);
            out.insert(b);
        }
    }
    if let Some(halfedges) = &args.halfedges {
        for tok in halfedges.split(',').filter(|s| !s.is_empty()) {
            let h = HalfEdgeId::new(tok)?;
            if !g.ground().contains(&h) {
                bail!("unknown half-edge {tok}");
            }
            out.insert(h);
        }
    }
    Ok(out)
}

fn quiver_for(doc: &ParsedGraph, labels: Option<&Path>) -> Result<Quiver> {
    let q = match &doc.grading {
        Some(grading) => graded_quiver_of(&doc.graph, grading),
        None => quiver_of(&doc.graph),
    };
    match labels {
        Some(path) => {
            let map = load_labels(path)?;
            Ok(q.with_labels(&map)?)
        }
        None => Ok(q),
    }
}

fn subset_edge_names(g: &BrauerGraph, subset: &BTreeSet<HalfEdgeId>) -> String {
    let names: BTreeSet<String> = subset.iter().map(|h| g.edge_name(h)).collect();
    if names.is_empty() {
        "(empty)".to_owned()
    } else {
        names.into_iter().collect::<Vec<_>>().join(" ")
    }
}

fn validate(file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    let g = &doc.graph;
    println!(
        "ok: {} half-edges, {} edges, {} vertices, {} faces",
        g.num_halfedges(),
        g.edges().len(),
        g.vertices().len(),
        g.faces().len()
    );
    if let Some(grading) = &doc.grading {
        match grading.check_one_homogeneous(g) {
            Ok(()) => println!("grading: one-homogeneous"),
            Err(e) => {
                println!("grading: {e}");
                return Ok(MISS);
            }
        }
    }
    Ok(PASS)
}

fn cycle_list(classes: &[Vec<HalfEdgeId>]) -> String {
    classes
        .iter()
        .map(|c| {
            let toks: Vec<&str> = c.iter().map(|h| h.as_str()).collect();
            format!("({})", toks.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn info(file: &Path) -> Result<ExitCode> {
    let doc = load(file)?;
    let g = &doc.graph;
    println!("halfedges: {}", g.num_halfedges());
    println!("edges: {}: {}", g.edges().len(), g.edge_names().join(" "));
    println!(
        "vertices: {}: {}",
        g.vertices().len(),
        cycle_list(g.vertices().classes())
    );
    println!(
        "faces: {}: {}",
        g.faces().len(),
        cycle_list(g.faces().classes())
    );
    println!("fingerprint: {}", invariant_report(g));
    println!("connected: {}", g.is_connected());
    println!("commuting: {}", iota_sigma_commutes(g));
    println!("dimension: {}", algebra_dimension(g));
    match &doc.grading {
        Some(grading) => {
            let kind = match grading.check_one_homogeneous(g) {
                Ok(()) => "one-homogeneous",
                Err(_) => "not one-homogeneous",
            };
            println!("graded: yes ({kind})");
        }
        None => println!("graded: no"),
    }
    Ok(PASS)
}

fn plain_move(file: &Path, subset: &SubsetArgs) -> Result<ExitCode> {
    let doc = load(file)?;
    if doc.grading.is_some() {
        bail!("document carries a grading, use graded-move");
    }
    let hp = resolve_subset(&doc.graph, subset)?;
    let (moved, data) = kauer_move(&doc.graph, &hp)?;
    println!("# moved subset: {}", subset_edge_names(&doc.graph, &hp));
    for s in &data.maximal_sectors {
        println!("# maximal sector: {} run {}", s.halfedge, s.run);
    }
    print!("{}", serialize(&moved, None));
    Ok(PASS)
}

fn parse_sector(text: &str) -> Result<Sector> {
    let (tok, run) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("sector must be TOKEN,RUN"))?;
    Ok(Sector {
        halfedge: HalfEdgeId::new(tok)?,
        run: run.parse().context("sector run must be a number")?,
    })
}

fn graded_move(file: &Path, subset: &SubsetArgs, sector: Option<&str>) -> Result<ExitCode> {
    let doc = load(file)?;
    let grading = doc
        .grading
        .clone()
        .ok_or_else(|| anyhow!("document carries no grading, use move"))?;
    let gg = GradedBrauerGraph::new(doc.graph.clone(), grading)?;
    let hp = resolve_subset(&doc.graph, subset)?;
    let (moved, applied) = match sector {
        Some(text) => {
            let s = parse_sector(text)?;
            (graded_sector_move(&gg, &hp, &s)?, vec![s])
        }
        None => graded_multi_move(&gg, &hp)?,
    };
    println!("# moved subset: {}", subset_edge_names(&doc.graph, &hp));
    for s in &applied {
        println!("# applied sector: {} run {}", s.halfedge, s.run);
    }
    print!("{}", serialize(moved.graph(), Some(moved.grading())));
    Ok(PASS)
}

fn quiver(file: &Path, dot: bool, labels: Option<&Path>) -> Result<ExitCode> {
    let doc = load(file)?;
    let q = quiver_for(&doc, labels)?;
    if dot {
        print!("{}", q.dot());
    } else {
        let names: Vec<&str> = q.nodes.iter().map(|n| n.name.as_str()).collect();
        println!("nodes: {}", names.join(" "));
        for line in q.text_lines() {
            println!("{line}");
        }
    }
    Ok(PASS)
}

fn relations(file: &Path, labels: Option<&Path>) -> Result<ExitCode> {
    let doc = load(file)?;
    let q = quiver_for(&doc, labels)?;
    let rels = relations_of(&doc.graph, &q);
    for line in rels.lines(&q) {
        println!("{line}");
    }
    Ok(PASS)
}

fn cut(
    file: &Path,
    check: Option<&Path>,
    gentle: Option<&Path>,
    list: bool,
    labels: Option<&Path>,
) -> Result<ExitCode> {
    let doc = load(file)?;
    let g = &doc.graph;
    let q = quiver_for(&doc, labels)?;
    if let Some(path) = check {
        let entries = load_cut_entries(path)?;
        let sources = resolve_cut_entries(&q, &entries)?;
        let diag = check_cut(g, &sources)?;
        for (least, count) in &diag.per_vertex {
            println!("vertex ({least}): {count} selected");
        }
        for h in &diag.not_arrows {
            println!("not an arrow: {h}");
        }
        println!("admissible: {}", diag.admissible);
        return Ok(if diag.admissible { PASS } else { MISS });
    }
    if let Some(path) = gentle {
        let entries = load_cut_entries(path)?;
        let sources = resolve_cut_entries(&q, &entries)?;
        let cut = admissible_cut(g, &sources)?;
        let p = gentle_quotient_of(g, &q, &cut);
        let cut_tokens: Vec<&str> = p.cut.sources().iter().map(|h| h.as_str()).collect();
        println!("cut: {}", cut_tokens.join(" "));
        let names: Vec<&str> = p.quiver.nodes.iter().map(|n| n.name.as_str()).collect();
        println!("nodes: {}", names.join(" "));
        for line in p.quiver.text_lines() {
            println!("{line}");
        }
        println!("relations:");
        for line in p.relation_lines() {
            println!("{line}");
        }
        let report = gentle_check(&p);
        println!("gentle: {}", report.gentle);
        for failure in &report.failures {
            println!("failure: {failure}");
        }
        return Ok(if report.gentle { PASS } else { MISS });
    }
    if list {
        let cuts = enumerate_admissible_cuts(g);
        for cut in &cuts {
            let tokens: Vec<&str> = cut.sources().iter().map(|h| h.as_str()).collect();
            println!("cut: {}", tokens.join(" "));
        }
        println!("total: {}", cuts.len());
        return Ok(PASS);
    }
    bail!("pass one of --check, --gentle, --list");
}

fn iso(left: &Path, right: &Path) -> Result<ExitCode> {
    let a = load(left)?.graph;
    let b = load(right)?.graph;
    match is_isomorphic(&a, &b) {
        Some(witness) => {
            println!("isomorphic");
            for (from, to) in &witness {
                println!("{from} -> {to}");
            }
            Ok(PASS)
        }
        None => {
            println!("not isomorphic");
            Ok(MISS)
        }
    }
}

fn compare(left: &Path, right: &Path) -> Result<ExitCode> {
    let a = load(left)?.graph;
    let b = load(right)?.graph;
    let fp_a = invariant_report(&a);
    let fp_b = invariant_report(&b);
    let comm_a = iota_sigma_commutes(&a);
    let comm_b = iota_sigma_commutes(&b);
    println!("left:  {fp_a} commuting={comm_a}");
    println!("right: {fp_b} commuting={comm_b}");
    let equal = fp_a == fp_b;
    println!(
        "fingerprints: {}",
        if equal { "equal" } else { "different" }
    );
    println!("isomorphic: {}", is_isomorphic(&a, &b).is_some());
    Ok(if equal { PASS } else { MISS })
}

fn run_reach(
    source: &Path,
    target: &Path,
    depth: usize,
    moves: Moves,
    budget: usize,
    labeled: bool,
) -> Result<ExitCode> {
    let a = load(source)?.graph;
    let b = load(target)?.graph;
    let kind = match moves {
        Moves::Generalized => MoveKind::Generalized,
        Moves::Standard => MoveKind::Standard,
    };
    let result = if labeled {
        reach_labeled(&a, &b, depth, kind, budget)
    } else {
        reach(&a, &b, depth, kind, budget)
    };
    if result.found {
        let path = result.path.expect("found searches carry a path");
        println!(
            "found at depth {} after exploring {} graphs",
            path.len(),
            result.explored
        );
        for step in &path {
            println!("step: {step}");
        }
        Ok(PASS)
    } else {
        println!(
            "not reached within depth {depth} (explored {} graphs)",
            result.explored
        );
        if result.budget_exhausted {
            println!("budget exhausted: the miss is inconclusive");
        }
        Ok(MISS)
    }
}

fn grading_ones(grading: &Grading) -> String {
    let ones: Vec<String> = grading
        .entries()
        .filter(|(_, d)| *d != 0)
        .map(|(h, d)| {
            if d == 1 {
                h.to_string()
            } else {
                format!("{h}={d}")
            }
        })
        .collect();
    ones.join(" ")
}

fn check_theorem(file: &Path, subset: &SubsetArgs) -> Result<ExitCode> {
    let doc = load(file)?;
    let hp = resolve_subset(&doc.graph, subset)?;
    let check = check_main_theorem(&doc.graph, &hp)?;
    println!("input cut: {}", grading_ones(&check.input_cut));
    for s in &check.sectors_applied {
        println!("applied sector: {} run {}", s.halfedge, s.run);
    }
    println!("moved cut: {}", grading_ones(check.moved.grading()));
    println!("moved cut admissible: {}", check.moved_cut_admissible);
    println!(
        "orientation matches plain move: {}",
        check.orientation_matches
    );
    println!("holds: {}", check.holds);
    Ok(if check.holds { PASS } else { MISS })
}

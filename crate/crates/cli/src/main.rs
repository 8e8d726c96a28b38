//! Command-line surface for edge-ideal computations: Betti tables,
//! homological invariants, strongly disjoint family certificates, and the
//! nonvanishing/family equivalence sweep.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use edge_ideals::certificates::{
    extract_certificate, family_exists, induced_matching_number, d_invariant,
    StronglyDisjointFamily,
};
use edge_ideals::complex::{
    independence_complex_with_limit, reduced_homology_dims, DEFAULT_MAX_COMPLEX_VERTICES,
};
use edge_ideals::graph::{builtin, DEFAULT_MAX_VERTICES};
use edge_ideals::hochster::{betti_table_with_limit, BettiTable, DEFAULT_MAX_TABLE_VERTICES};
use edge_ideals::io::{parse_edge_list_with_limit, parse_graph6_with_limit};
use edge_ideals::wchordal::is_weakly_chordal_with_limit;
use edge_ideals::certificates::verify_equivalence;
use edge_ideals::{Error, Field, Graph, Result, VertexSet};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hochster",
    version,
    about = "Betti tables, invariants and bipartite certificates of graph edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multigraded Betti table of R/I(G) over one or more fields
    Betti(CommonArgs),
    /// Weak chordality, induced matching number, d, big height, pdim, reg
    Invariants(CommonArgs),
    /// Strongly disjoint family witnessing a given Betti number
    Certificate(CertArgs),
    /// Compare nonvanishing Betti numbers with family existence on every cell
    Verify(CommonArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["edges", "g6", "builtin"])))]
struct CommonArgs {
    /// Edge-list file: "n m" header line, then one "u v" pair per line
    #[arg(long, value_name = "PATH")]
    edges: Option<PathBuf>,
    /// graph6 string
    #[arg(long, value_name = "STR")]
    g6: Option<String>,
    /// Built-in graph: k2, p3, p4, c4, c5, c6, star3, 2k2, katzman
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Coefficient field, q or fp:P with P prime (repeatable)
    #[arg(long = "field", value_name = "FIELD")]
    fields: Vec<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Raise or lower the vertex-count guards (logged to stderr)
    #[arg(long = "max-n", value_name = "N")]
    max_n: Option<usize>,
}

#[derive(Args)]
struct CertArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Vertex subset as a comma-separated list, e.g. "1,2,4" (default: all)
    #[arg(long, value_name = "LIST")]
    sigma: Option<String>,
    /// Number of blocks the family must have
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable table
    Table,
    /// One JSON record per line
    Records,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::GuardExceeded { .. } | Error::TooManyVertices { .. } => 3,
                Error::ProofObligation { .. } => 1,
                _ => 2,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Cmd::Betti(c) => cmd_betti(c),
        Cmd::Invariants(c) => cmd_invariants(c),
        Cmd::Certificate(c) => cmd_certificate(c),
        Cmd::Verify(c) => cmd_verify(c),
    }
}

/// Parse guard for graph ingestion; analysis guard for table/sweep sizes.
fn limits(c: &CommonArgs) -> (usize, usize) {
    if let Some(m) = c.max_n {
        eprintln!("guard override: max-n = {m}");
        (m, m)
    } else {
        (DEFAULT_MAX_VERTICES, DEFAULT_MAX_TABLE_VERTICES)
    }
}

fn load_graph(c: &CommonArgs, parse_limit: usize) -> Result<Graph> {
    if let Some(path) = &c.edges {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        })?;
        parse_edge_list_with_limit(&text, parse_limit)
    } else if let Some(s) = &c.g6 {
        parse_graph6_with_limit(s, parse_limit)
    } else {
        let name = c.builtin.as_deref().expect("input group is required");
        let g = builtin(name).ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("unknown builtin graph '{name}'"),
        })?;
        if g.vertex_count() > parse_limit {
            return Err(Error::TooManyVertices { n: g.vertex_count(), max: parse_limit });
        }
        Ok(g)
    }
}

fn parse_fields(c: &CommonArgs) -> Result<Vec<Field>> {
    if c.fields.is_empty() {
        return Ok(vec![Field::Rationals]);
    }
    let mut out = Vec::new();
    for raw in &c.fields {
        let f = Field::parse(raw)?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

fn parse_sigma(raw: &Option<String>, g: &Graph) -> Result<VertexSet> {
    let Some(raw) = raw else {
        return Ok(g.vertices());
    };
    let mut sigma = VertexSet::EMPTY;
    for part in raw.split(',') {
        let part = part.trim();
        let v: usize = part.parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("invalid vertex '{part}' in --sigma"),
        })?;
        if v == 0 || v > g.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
        sigma = sigma.with(v);
    }
    Ok(sigma)
}

fn sorted(vs: VertexSet) -> Vec<usize> {
    vs.to_vec()
}

#[derive(Serialize)]
struct BettiEntryRec {
    i: usize,
    sigma: Vec<usize>,
    dim: usize,
}

#[derive(Serialize)]
struct GradedRec {
    i: usize,
    j: usize,
    dim: usize,
}

#[derive(Serialize)]
struct BettiRec {
    n: usize,
    field: String,
    betti: Vec<BettiEntryRec>,
    graded: Vec<GradedRec>,
    pdim: usize,
    reg: usize,
}

fn betti_rec(g: &Graph, t: &BettiTable) -> BettiRec {
    BettiRec {
        n: g.vertex_count(),
        field: t.field().to_string(),
        betti: t
            .iter()
            .map(|(s, i, d)| BettiEntryRec { i, sigma: sorted(s), dim: d })
            .collect(),
        graded: t
            .graded()
            .into_iter()
            .map(|((i, j), d)| GradedRec { i, j, dim: d })
            .collect(),
        pdim: t.pdim(),
        reg: t.reg(),
    }
}

fn cmd_betti(c: &CommonArgs) -> Result<u8> {
    let (parse_limit, analysis_limit) = limits(c);
    let g = load_graph(c, parse_limit)?;
    for field in parse_fields(c)? {
        let t = betti_table_with_limit(&g, field, analysis_limit)?;
        match c.format {
            Format::Records => println!("{}", to_json(&betti_rec(&g, &t))),
            Format::Table => {
                println!(
                    "field {}: n = {}, {} nonzero multidegrees",
                    field,
                    g.vertex_count(),
                    t.len()
                );
                for (s, i, d) in t.iter() {
                    println!("  i={} sigma={:?} dim={}", i, sorted(s), d);
                }
                println!("graded:");
                for ((i, j), d) in t.graded() {
                    println!("  i={i} j={j} dim={d}");
                }
                println!("pdim = {}, reg = {}", t.pdim(), t.reg());
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct FieldInvariantsRec {
    field: String,
    pdim: usize,
    reg: usize,
    reg_eq_imn: Option<bool>,
    pdim_eq_d: Option<bool>,
}

#[derive(Serialize)]
struct InvariantsRec {
    n: usize,
    edges: usize,
    weakly_chordal: bool,
    imn: Option<usize>,
    d: Option<usize>,
    big_height: Option<usize>,
    identities_checked: bool,
    fields: Vec<FieldInvariantsRec>,
}

fn cmd_invariants(c: &CommonArgs) -> Result<u8> {
    let (parse_limit, analysis_limit) = limits(c);
    let g = load_graph(c, parse_limit)?;
    let wc = is_weakly_chordal_with_limit(&g, analysis_limit)?;
    let edgeless = g.edge_count() == 0;
    let (imn, d, bh) = if edgeless {
        (None, None, None)
    } else {
        (
            Some(induced_matching_number(&g)?),
            Some(d_invariant(&g)?.0),
            Some(g.big_height()?),
        )
    };
    let identities_checked = wc && !edgeless;
    let mut fields_out = Vec::new();
    let mut violation = false;
    for field in parse_fields(c)? {
        let t = betti_table_with_limit(&g, field, analysis_limit)?;
        let (pdim, reg) = (t.pdim(), t.reg());
        let (reg_eq_imn, pdim_eq_d) = if identities_checked {
            (Some(Some(reg) == imn), Some(Some(pdim) == d))
        } else {
            (None, None)
        };
        if reg_eq_imn == Some(false) || pdim_eq_d == Some(false) {
            violation = true;
            eprintln!(
                "theorem violation over {field}: expected reg = imn and pdim = d, got reg={reg} imn={} pdim={pdim} d={}",
                imn.unwrap(),
                d.unwrap()
            );
        }
        fields_out.push(FieldInvariantsRec {
            field: field.to_string(),
            pdim,
            reg,
            reg_eq_imn,
            pdim_eq_d,
        });
    }
    let rec = InvariantsRec {
        n: g.vertex_count(),
        edges: g.edge_count(),
        weakly_chordal: wc,
        imn,
        d,
        big_height: bh,
        identities_checked,
        fields: fields_out,
    };
    match c.format {
        Format::Records => println!("{}", to_json(&rec)),
        Format::Table => {
            println!("n = {}, edges = {}", rec.n, rec.edges);
            println!("weakly_chordal = {wc}");
            println!("imn = {}", opt(rec.imn));
            println!("d = {}", opt(rec.d));
            println!("big_height = {}", opt(rec.big_height));
            for f in &rec.fields {
                match (f.reg_eq_imn, f.pdim_eq_d) {
                    (Some(a), Some(b)) => println!(
                        "field {}: pdim = {}, reg = {}, pdim == d: {}, reg == imn: {}",
                        f.field, f.pdim, f.reg, b, a
                    ),
                    _ => println!(
                        "field {}: pdim = {}, reg = {} (identities not asserted)",
                        f.field, f.pdim, f.reg
                    ),
                }
            }
        }
    }
    Ok(if violation { 1 } else { 0 })
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

#[derive(Serialize)]
struct BlockRec {
    x: Vec<usize>,
    y: Vec<usize>,
}

#[derive(Serialize)]
struct FamilyRec {
    blocks: Vec<BlockRec>,
    reps: Vec<(usize, usize)>,
}

fn family_rec(f: &StronglyDisjointFamily) -> FamilyRec {
    FamilyRec {
        blocks: f
            .blocks
            .iter()
            .map(|b| BlockRec { x: sorted(b.x), y: sorted(b.y) })
            .collect(),
        reps: f.reps.clone(),
    }
}

fn print_family(label: &str, f: &StronglyDisjointFamily) {
    println!("{label}:");
    for (b, rep) in f.blocks.iter().zip(&f.reps) {
        println!("  X={:?} Y={:?} rep=({},{})", sorted(b.x), sorted(b.y), rep.0, rep.1);
    }
}

#[derive(Serialize)]
struct CertificateRec {
    n: usize,
    field: String,
    sigma: Vec<usize>,
    r: usize,
    beta: usize,
    family: Option<FamilyRec>,
    extracted: Option<FamilyRec>,
    note: Option<String>,
}

fn cmd_certificate(args: &CertArgs) -> Result<u8> {
    let c = &args.common;
    let (parse_limit, analysis_limit) = limits(c);
    let g = load_graph(c, parse_limit)?;
    let sigma = parse_sigma(&args.sigma, &g)?;
    let r = args.r as usize;
    let wc = is_weakly_chordal_with_limit(&g, analysis_limit)?;
    let family = family_exists(&g, sigma, r)?;
    let complex =
        independence_complex_with_limit(&g, sigma, analysis_limit.max(DEFAULT_MAX_COMPLEX_VERTICES))?;
    let mut exit = 0u8;
    for field in parse_fields(c)? {
        let beta = reduced_homology_dims(&complex, field)?.dim(r as isize - 1);
        let mut note = None;
        let mut extracted = None;
        match (beta != 0, family.is_some()) {
            (true, true) if wc => {
                extracted = Some(extract_certificate(&g, sigma, r, field)?);
            }
            (true, false) if wc => {
                eprintln!(
                    "theorem violation over {field}: beta != 0 on a weakly chordal graph but no family at sigma={:?}, r={r}",
                    sorted(sigma)
                );
                exit = 1;
            }
            (false, true) => {
                eprintln!(
                    "theorem violation over {field}: family exists but beta = 0 at sigma={:?}, r={r}",
                    sorted(sigma)
                );
                exit = 1;
            }
            (true, false) => {
                note = Some("hypothesis not met: graph not weakly chordal".to_string());
            }
            _ => {}
        }
        match c.format {
            Format::Records => {
                let rec = CertificateRec {
                    n: g.vertex_count(),
                    field: field.to_string(),
                    sigma: sorted(sigma),
                    r,
                    beta,
                    family: family.as_ref().map(family_rec),
                    extracted: extracted.as_ref().map(family_rec),
                    note,
                };
                println!("{}", to_json(&rec));
            }
            Format::Table => {
                println!(
                    "field {}: sigma={:?} r={} beta={}",
                    field,
                    sorted(sigma),
                    r,
                    beta
                );
                match &family {
                    Some(f) => print_family("family", f),
                    None => println!("family: none"),
                }
                if let Some(f) = &extracted {
                    print_family("extracted", f);
                }
                if let Some(n) = &note {
                    println!("note: {n}");
                }
            }
        }
    }
    Ok(exit)
}

#[derive(Serialize)]
struct CellRec {
    sigma: Vec<usize>,
    r: usize,
}

#[derive(Serialize)]
struct VerifyRec {
    n: usize,
    field: String,
    weakly_chordal: bool,
    sufficiency_violations: Vec<CellRec>,
    necessity_violations: Vec<CellRec>,
    applicable_ok: bool,
}

fn cmd_verify(c: &CommonArgs) -> Result<u8> {
    let (parse_limit, _) = limits(c);
    let g = load_graph(c, parse_limit)?;
    let mut all_ok = true;
    for field in parse_fields(c)? {
        let rep = verify_equivalence(&g, field)?;
        let ok = rep.applicable_ok();
        all_ok &= ok;
        match c.format {
            Format::Records => {
                let rec = VerifyRec {
                    n: g.vertex_count(),
                    field: field.to_string(),
                    weakly_chordal: rep.weakly_chordal,
                    sufficiency_violations: rep
                        .sufficiency_violations
                        .iter()
                        .map(|&(s, r)| CellRec { sigma: sorted(s), r })
                        .collect(),
                    necessity_violations: rep
                        .necessity_violations
                        .iter()
                        .map(|&(s, r)| CellRec { sigma: sorted(s), r })
                        .collect(),
                    applicable_ok: ok,
                };
                println!("{}", to_json(&rec));
            }
            Format::Table => {
                println!(
                    "field {}: weakly_chordal={}, sufficiency violations: {}, necessity violations: {} -> {}",
                    field,
                    rep.weakly_chordal,
                    rep.sufficiency_violations.len(),
                    rep.necessity_violations.len(),
                    if ok { "ok" } else { "VIOLATION" }
                );
                for (s, r) in &rep.sufficiency_violations {
                    println!("  sufficiency: sigma={:?} r={}", sorted(*s), r);
                }
                for (s, r) in &rep.necessity_violations {
                    println!("  necessity: sigma={:?} r={}", sorted(*s), r);
                }
                if !rep.weakly_chordal && !rep.necessity_violations.is_empty() {
                    println!("  (necessity not applicable: graph not weakly chordal)");
                }
            }
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize to JSON")
}

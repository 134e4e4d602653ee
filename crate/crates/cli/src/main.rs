//! Command-line front end: enumeration, construction, decomposition,
//! operator application, and the verification suites, with deterministic
//! text or JSON output.
//!
//! Exit status: 0 on success, 1 when a verification check or an exact
//! certification is falsified, 2 on usage errors (unparsable grammar,
//! mismatched blocks, out-of-range bounds).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Like `println!`, but a closed pipe (e.g. piping into `head`) silently
/// drops the line instead of panicking; computations and exit codes are
/// unaffected.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

use hspecht::combinatorics::{
    canonical_multi_tableau, enumerate_nst, enumerate_r_diagrams, enumerate_st, index_tableau,
    word, BlockStructure, MultiDiagram, MultiTableau, Partition, Tableau,
};
use hspecht::decomp::FreeModuleSolver;
use hspecht::polyalg::parse_polynomial;
use hspecht::specht::higher_specht;
use hspecht::verify::{run_suite, CheckReport, Status, VerifyConfig};
use hspecht::weyl::parse_operator;
use hspecht::{Error, QPolynomial, Result};

/// Hard ceilings on the verify bounds; beyond these the sweeps leave the
/// exact-computation comfort zone this tool is scoped to.
const CEILING_MAX_N: usize = 6;
const CEILING_MAX_DEGREE: u32 = 8;
const CEILING_MAX_GROUP_ORDER: u128 = 40320;

#[derive(Parser)]
#[command(
    name = "hspecht",
    version,
    about = "Exact higher Specht polynomials for products of symmetric groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate standard multi-tableaux with their words and index tableaux
    Tableaux {
        /// Block sizes, e.g. `5,3`
        #[arg(long)]
        blocks: String,
        /// Shape to enumerate, e.g. `[3,2]|[2,1]`; omit to list all shapes
        #[arg(long)]
        diagram: Option<String>,
        /// Only the natural (block-respecting) standard tableaux instead of
        /// all standard fillings of the full entry set
        #[arg(long)]
        natural: bool,
        /// Show a single tableau instead of enumerating, e.g.
        /// `[[1,4,6],[2,7]]|[[3,8],[5]]`
        #[arg(long, conflicts_with = "natural")]
        tableau: Option<String>,
        /// Also print the word w(T) and index tableau i(T) of each tableau
        #[arg(long)]
        show_index: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Construct a higher Specht polynomial F_T^S
    Specht {
        /// Block sizes, e.g. `2,1`
        #[arg(long)]
        blocks: String,
        /// Shape, e.g. `[1,1]|[1]`
        #[arg(long)]
        diagram: String,
        /// The tableau T, e.g. `[[1],[2]]|[[3]]`; defaults to the canonical one
        #[arg(long)]
        tableau: Option<String>,
        /// The index tableau S supplying the exponents; defaults to the
        /// canonical one
        #[arg(long)]
        index_source: Option<String>,
        /// Use the canonical tableau for both T and S
        #[arg(long, conflicts_with_all = ["tableau", "index_source"])]
        canonical: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decompose a polynomial over the invariant ring on the higher Specht
    /// generators
    Decompose {
        /// Block sizes, e.g. `2,1`
        #[arg(long)]
        blocks: String,
        /// The polynomial to decompose, e.g. `x1*x3`
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply a differential operator to a polynomial
    ApplyOp {
        /// The operator, e.g. `x1^2*d1 + x2^2*d2`
        #[arg(long)]
        op: String,
        /// The polynomial to act on
        #[arg(long)]
        poly: String,
        /// Block sizes fixing the variable count; inferred from the inputs
        /// when omitted
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run verification suites and report every check
    Verify {
        /// Suite name (see --help for the list), or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        /// Restrict every sweep to one block structure, e.g. `2,2`
        #[arg(long)]
        blocks: Option<String>,
        /// Sweep block structures of total size up to this (ceiling 6)
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Degree cap for random decomposition inputs (ceiling 8)
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Ceiling on the product-group order for whole-group computations
        /// (ceiling 40320)
        #[arg(long, default_value_t = 720)]
        max_group_order: u128,
        /// Seed for the deterministic random samples
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random polynomials per block structure in the freeness suite
        #[arg(long, default_value_t = 100)]
        random_polys: usize,
        /// Random operator combinations per block structure
        #[arg(long, default_value_t = 20)]
        random_operators: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Error::Falsified {
            check,
            instance,
            detail,
        }) => {
            eprintln!("FAIL {check} [{instance}] {detail}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Tableaux {
            blocks,
            diagram,
            natural,
            tableau,
            show_index,
            format,
        } => tableaux(
            &blocks,
            diagram.as_deref(),
            natural,
            tableau.as_deref(),
            show_index,
            format,
        ),
        Command::Specht {
            blocks,
            diagram,
            tableau,
            index_source,
            canonical: _,
            format,
        } => specht(
            &blocks,
            &diagram,
            tableau.as_deref(),
            index_source.as_deref(),
            format,
        ),
        Command::Decompose {
            blocks,
            poly,
            format,
        } => decompose(&blocks, &poly, format),
        Command::ApplyOp {
            op,
            poly,
            blocks,
            format,
        } => apply_op(&op, &poly, blocks.as_deref(), format),
        Command::Verify {
            suite,
            blocks,
            max_n,
            max_degree,
            max_group_order,
            seed,
            random_polys,
            random_operators,
            format,
        } => verify(
            &suite,
            blocks.as_deref(),
            max_n,
            max_degree,
            max_group_order,
            seed,
            random_polys,
            random_operators,
            format,
        ),
    }
}

fn parse_blocks(input: &str) -> Result<BlockStructure> {
    let mut sizes = Vec::new();
    for piece in input.split(',') {
        let piece = piece.trim();
        let size: usize = piece
            .parse()
            .map_err(|_| Error::Parse(format!("invalid block size `{piece}` in `{input}`")))?;
        sizes.push(size);
    }
    BlockStructure::new(sizes)
}

/// `[3,2]` → the numbers inside; used for both partitions and tableau rows.
fn parse_bracketed(piece: &str, input: &str) -> Result<Vec<usize>> {
    let inner = piece
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[...]` around `{piece}` in `{input}`")))?;
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse()
                .map_err(|_| Error::Parse(format!("invalid number `{tok}` in `{input}`")))
        })
        .collect()
}

/// Diagram grammar: parts comma-separated, blocks pipe-separated, e.g.
/// `[3,2]|[2,1]`.
fn parse_diagram(input: &str, block: &BlockStructure) -> Result<MultiDiagram> {
    let components = input
        .split('|')
        .map(|piece| Partition::new(parse_bracketed(piece, input)?))
        .collect::<Result<Vec<_>>>()?;
    MultiDiagram::new(components, block.clone())
}

/// Tableau grammar: rows bracketed and comma-separated inside an outer
/// bracket per component, components pipe-separated, e.g.
/// `[[1,4,6],[2,7]]|[[3,8],[5]]`.
fn parse_multi_tableau(input: &str, block: &BlockStructure) -> Result<MultiTableau> {
    let mut components = Vec::new();
    for piece in input.split('|') {
        let inner = piece
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| {
                Error::Parse(format!("expected `[[...],...]` around `{piece}` in `{input}`"))
            })?;
        let raw_rows: Vec<&str> = inner.split("],[").collect();
        let last = raw_rows.len() - 1;
        let mut rows = Vec::new();
        for (i, raw) in raw_rows.into_iter().enumerate() {
            let mut framed = String::new();
            if i != 0 {
                framed.push('[');
            }
            framed.push_str(raw);
            if i != last {
                framed.push(']');
            }
            rows.push(parse_bracketed(&framed, input)?);
        }
        components.push(Tableau::new(rows)?);
    }
    MultiTableau::new(components, block.clone())
}

/// Multi-diagram as it appears on the wire: an array of partitions, each an
/// array of row lengths.
fn diagram_json(d: &MultiDiagram) -> serde_json::Value {
    let parts: Vec<_> = d.components().iter().map(|p| p.parts().to_vec()).collect();
    json!(parts)
}

/// Multi-tableau as it appears on the wire: an array of row-grids.
fn tableau_json(t: &MultiTableau) -> serde_json::Value {
    let grids: Vec<_> = t.components().iter().map(|c| c.rows().to_vec()).collect();
    json!(grids)
}

fn format_word(t: &MultiTableau) -> String {
    let letters: Vec<String> = word(t).letters().iter().map(ToString::to_string).collect();
    format!("({})", letters.join(","))
}

fn print_json(value: &serde_json::Value) {
    outln!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON serialization cannot fail")
    );
}

fn tableaux(
    blocks: &str,
    diagram: Option<&str>,
    natural: bool,
    tableau: Option<&str>,
    show_index: bool,
    format: Format,
) -> Result<ExitCode> {
    let block = parse_blocks(blocks)?;
    let Some(diagram) = diagram else {
        // No shape given: list every shape with its tableau count.
        let diagrams = enumerate_r_diagrams(&block);
        match format {
            Format::Text => {
                for d in &diagrams {
                    outln!("λ={d}  dim={}", d.nst_count());
                }
            }
            Format::Json => {
                let rows: Vec<_> = diagrams
                    .iter()
                    .map(|d| json!({"diagram": diagram_json(d), "dimension": d.nst_count()}))
                    .collect();
                print_json(&json!({"blocks": block.sizes(), "diagrams": rows}));
            }
        }
        return Ok(ExitCode::SUCCESS);
    };
    let shape = parse_diagram(diagram, &block)?;
    let listing = match tableau {
        Some(input) => {
            let t = parse_multi_tableau(input, &block)?;
            if t.diagram() != shape {
                return Err(Error::Invalid(format!(
                    "tableau {t} does not have shape {shape}"
                )));
            }
            vec![t]
        }
        None if natural => enumerate_nst(&shape),
        None => enumerate_st(&shape),
    };
    match format {
        Format::Text => {
            for t in &listing {
                if show_index {
                    outln!("{t}  w(T)={}  i(T)={}", format_word(t), index_tableau(t)?);
                } else {
                    outln!("{t}");
                }
            }
        }
        Format::Json => {
            let rows = listing
                .iter()
                .map(|t| {
                    Ok(json!({
                        "tableau": tableau_json(t),
                        "word": word(t).letters(),
                        "index": index_tableau(t)?.components(),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            print_json(&json!({
                "blocks": block.sizes(),
                "diagram": diagram_json(&shape),
                "reading": if natural { "natural" } else { "standard" },
                "tableaux": rows,
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn specht(
    blocks: &str,
    diagram: &str,
    tableau: Option<&str>,
    index_source: Option<&str>,
    format: Format,
) -> Result<ExitCode> {
    let block = parse_blocks(blocks)?;
    let shape = parse_diagram(diagram, &block)?;
    let t = match tableau {
        Some(input) => parse_multi_tableau(input, &block)?,
        None => canonical_multi_tableau(&shape),
    };
    let s = match index_source {
        Some(input) => parse_multi_tableau(input, &block)?,
        None => canonical_multi_tableau(&shape),
    };
    if t.diagram() != shape || s.diagram() != shape {
        return Err(Error::Invalid(format!(
            "tableau shapes must match the diagram {shape}"
        )));
    }
    let f: QPolynomial = higher_specht(&t, &s)?;
    match format {
        Format::Text => outln!("{f}"),
        Format::Json => print_json(&json!({
            "blocks": block.to_string(),
            "diagram": shape.to_string(),
            "t": t.to_string(),
            "s": s.to_string(),
            "polynomial": f.to_string(),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn decompose(blocks: &str, poly: &str, format: Format) -> Result<ExitCode> {
    let block = parse_blocks(blocks)?;
    let f = parse_polynomial(block.n(), poly)?;
    let solver = FreeModuleSolver::new(&block)?;
    let result = solver.decompose(&f)?;
    match format {
        Format::Text => {
            for (key, coeff) in result.coefficients() {
                outln!("{key}: {coeff}");
            }
        }
        Format::Json => {
            let generators: Vec<_> = result
                .coefficients()
                .iter()
                .map(|(key, _)| key.to_string())
                .collect();
            let coefficients: Vec<_> = result
                .coefficients()
                .iter()
                .map(|(_, coeff)| coeff.to_string())
                .collect();
            print_json(&json!({
                "blocks": block.to_string(),
                "input": f.to_string(),
                "generators": generators,
                "coefficients": coefficients,
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Largest variable index mentioned as `x<k>` or `d<k>` in the inputs.
fn infer_variable_count(inputs: &[&str]) -> usize {
    let mut n = 1usize;
    for input in inputs {
        let bytes = input.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b'x' || bytes[i] == b'd' {
                let start = i + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                if end > start {
                    if let Ok(k) = input[start..end].parse::<usize>() {
                        n = n.max(k);
                    }
                }
                i = end;
            } else {
                i += 1;
            }
        }
    }
    n
}

fn apply_op(op: &str, poly: &str, blocks: Option<&str>, format: Format) -> Result<ExitCode> {
    let n = match blocks {
        Some(input) => parse_blocks(input)?.n(),
        None => infer_variable_count(&[op, poly]),
    };
    let operator = parse_operator(n, op)?;
    let f = parse_polynomial(n, poly)?;
    let result = operator.apply(&f);
    match format {
        Format::Text => outln!("{result}"),
        Format::Json => print_json(&json!({
            "n": n,
            "op": operator.to_string(),
            "input": f.to_string(),
            "result": result.to_string(),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: &str,
    blocks: Option<&str>,
    max_n: usize,
    max_degree: u32,
    max_group_order: u128,
    seed: u64,
    random_polys: usize,
    random_operators: usize,
    format: Format,
) -> Result<ExitCode> {
    if max_n > CEILING_MAX_N {
        return Err(Error::Invalid(format!(
            "--max-n {max_n} exceeds the hard ceiling {CEILING_MAX_N}"
        )));
    }
    if max_degree > CEILING_MAX_DEGREE {
        return Err(Error::Invalid(format!(
            "--max-degree {max_degree} exceeds the hard ceiling {CEILING_MAX_DEGREE}"
        )));
    }
    if max_group_order > CEILING_MAX_GROUP_ORDER {
        return Err(Error::Invalid(format!(
            "--max-group-order {max_group_order} exceeds the hard ceiling {CEILING_MAX_GROUP_ORDER}"
        )));
    }
    let config = VerifyConfig {
        max_n,
        max_degree,
        max_group_order,
        blocks: blocks.map(parse_blocks).transpose()?,
        seed,
        random_polys,
        random_operators,
    };
    let reports = run_suite(suite, &config)?;
    match format {
        Format::Text => {
            for report in &reports {
                outln!("{report}");
            }
            let count = |status: Status| reports.iter().filter(|r| r.status == status).count();
            outln!(
                "{} checks: {} pass, {} fail, {} skip, {} info",
                reports.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skip),
                count(Status::Info),
            );
        }
        Format::Json => {
            let rows: Vec<_> = reports.iter().map(report_json).collect();
            print_json(&serde_json::Value::Array(rows));
        }
    }
    if hspecht::verify::has_failure(&reports) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn report_json(report: &CheckReport) -> serde_json::Value {
    json!({
        "check": report.check,
        "instance": report.instance,
        "status": report.status.as_str(),
        "witness": report.witness,
    })
}

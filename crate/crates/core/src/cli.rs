//! Command-line front end. Output is deterministic for a given input.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 input that
//! parses but fails validation, 4 a size bound or catalog limit was hit.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{groups_of_order, small_groups, transitive_catalog, transitive_groups, CatalogEntry};
use crate::descent::{validate_presentation, Descent, DescentReport, SplittingFieldPresentation};
use crate::error::{Error, Result};
use crate::group::{GroupDocument, PermGroup};
use crate::groupid::identify;
use crate::holomorph::automorphism_data;
use crate::hopf::{
    classify_entry, count_structures, holomorph_orders, is_hopf_galois, ClassifyRow, CountReport,
    ExtensionDatum, HGStructure,
};
use crate::lattice::{
    intermediate_report_bounded, stable_subgroup_records, strong_form_holds, IntermediateRow,
    INTERMEDIATE_MAX_DEGREE,
};

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "hgkit", version, about = "Hopf Galois structures on separable extensions")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest group order processed (for `intermediate`: largest [F:k]).
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Report inputs over the bound as skipped instead of failing.
    #[arg(long, global = true)]
    pub skip_large: bool,
}

#[derive(Debug, Args)]
pub struct ExtensionArgs {
    /// Galois group of the normal closure, as a group JSON document.
    #[arg(long)]
    pub group: PathBuf,
    /// Subgroup fixing the extension. Omitted: the Galois extension.
    #[arg(long, conflicts_with = "point_stabilizer")]
    pub subgroup: Option<PathBuf>,
    /// Use the stabilizer of point 1 of a transitive group as the subgroup.
    #[arg(long)]
    pub point_stabilizer: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the extension is Hopf Galois.
    Check(ExtensionArgs),
    /// Count structures by type.
    Count(ExtensionArgs),
    /// Table of verdicts for every transitive group of a degree.
    Classify {
        #[arg(long)]
        degree: usize,
        /// Also count every structure.
        #[arg(long)]
        counts: bool,
    },
    /// Stable subgroups and the image of the correspondence for each structure.
    Lattice {
        #[command(flatten)]
        ext: ExtensionArgs,
        #[arg(long)]
        structure: Option<usize>,
    },
    /// Verdicts for the intermediate fields of the normal closure.
    Intermediate {
        #[arg(long, conflicts_with = "degree")]
        group: Option<PathBuf>,
        #[arg(long, requires = "group")]
        subgroup: Option<PathBuf>,
        /// All transitive groups of this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Restrict `--degree` to one catalog name.
        #[arg(long, requires = "degree")]
        name: Option<String>,
    },
    /// Compute the Hopf algebra of a structure from a field presentation.
    Descent {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        subgroup: PathBuf,
        #[arg(long, default_value_t = 0)]
        structure: usize,
    },
    /// List catalog groups.
    Catalog {
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, conflicts_with = "degree")]
        order: Option<usize>,
    },
    /// Holomorph orders for the groups of an order, or for one group.
    Hol {
        #[arg(long, conflicts_with = "group")]
        degree: Option<usize>,
        #[arg(long)]
        group: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_PARSE,
        Error::DegreeMismatch { .. } | Error::NotSubgroup(_) | Error::Invalid(_) => EXIT_VALIDATION,
        Error::BoundExceeded { .. } | Error::Unsupported(_) => EXIT_BOUND,
    }
}

/// Parses `args` (program name first), runs, and returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(&config) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            exit_code(&e)
        }
    }
}

pub fn run(config: &RunConfig) -> Result<String> {
    let fmt = config.format;
    match &config.command {
        Command::Check(a) => {
            let e = load_extension(a)?;
            check_bound(config, e.group().order())?;
            check(&e, fmt)
        }
        Command::Count(a) => {
            let e = load_extension(a)?;
            check_bound(config, e.group().order())?;
            count(&count_structures(&e)?, fmt)
        }
        Command::Classify { degree, counts } => {
            let table = classify_table(*degree, *counts, config.max_order, config.skip_large)?;
            classify_output(&table, fmt)
        }
        Command::Lattice { ext, structure } => {
            let e = load_extension(ext)?;
            check_bound(config, e.group().order())?;
            lattice(&e, *structure, fmt)
        }
        Command::Intermediate {
            group,
            subgroup,
            degree,
            name,
        } => {
            let bound = config.max_order.unwrap_or(INTERMEDIATE_MAX_DEGREE);
            let mut reports = Vec::new();
            if let Some(path) = group {
                let g = load_group(path)?;
                let e = match subgroup {
                    Some(p) => ExtensionDatum::new(&g, &load_group(p)?)?,
                    None => ExtensionDatum::from_transitive(&g)?,
                };
                let name = group_name(path)?;
                reports.push(IntermediateReport {
                    name,
                    rows: intermediate_report_bounded(&e, bound)?,
                });
            } else if let Some(d) = degree {
                for entry in transitive_groups(*d)? {
                    if name.as_ref().is_some_and(|n| *n != entry.name) {
                        continue;
                    }
                    let Some(g) = entry.group() else { continue };
                    let e = ExtensionDatum::from_transitive(g)?;
                    reports.push(IntermediateReport {
                        name: entry.name.clone(),
                        rows: intermediate_report_bounded(&e, bound)?,
                    });
                }
                if reports.is_empty() {
                    return Err(Error::Invalid("no matching catalog group".into()));
                }
            } else {
                return Err(Error::Parse("intermediate needs --group or --degree".into()));
            }
            intermediate(&reports, fmt)
        }
        Command::Descent {
            field,
            group,
            subgroup,
            structure,
        } => {
            let g = load_group(group)?;
            check_bound(config, g.order())?;
            let e = ExtensionDatum::new(&g, &load_group(subgroup)?)?;
            let text = read(field)?;
            let p = validate_presentation(&SplittingFieldPresentation::from_json(&text)?, &g)?;
            let structures = count_structures(&e)?.structures;
            let s = structures.get(*structure).ok_or_else(|| {
                Error::Invalid(format!(
                    "structure index {} out of range ({} structures)",
                    structure,
                    structures.len()
                ))
            })?;
            let d = Descent::new(&p, &e, s)?;
            descent(&d.report()?, fmt)
        }
        Command::Catalog { degree, order } => {
            let entries: Vec<&CatalogEntry> = match (degree, order) {
                (Some(d), _) => transitive_groups(*d)?,
                (None, Some(m)) => groups_of_order(*m)?,
                (None, None) => transitive_catalog().iter().chain(small_groups()).collect(),
            };
            catalog(&entries, fmt)
        }
        Command::Hol { degree, group } => {
            let rows = match (degree, group) {
                (Some(d), _) => hol_rows(*d)?,
                (None, Some(path)) => {
                    let n = load_group(path)?;
                    let aut = automorphism_data(&n)?.len();
                    vec![HolRow {
                        name: identify(&n),
                        order: n.order(),
                        aut_order: aut,
                        hol_order: n.order() * aut,
                    }]
                }
                (None, None) => return Err(Error::Parse("hol needs --degree or --group".into())),
            };
            hol(&rows, fmt)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {}", path.display(), e)))
}

fn load_document(path: &Path) -> Result<GroupDocument> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))
}

pub fn load_group(path: &Path) -> Result<PermGroup> {
    load_document(path)?.to_group()
}

fn group_name(path: &Path) -> Result<String> {
    let doc = load_document(path)?;
    Ok(doc.name.unwrap_or_else(|| path.display().to_string()))
}

fn load_extension(a: &ExtensionArgs) -> Result<ExtensionDatum> {
    let g = load_group(&a.group)?;
    match (&a.subgroup, a.point_stabilizer) {
        (Some(p), _) => ExtensionDatum::new(&g, &load_group(p)?),
        (None, true) => ExtensionDatum::from_transitive(&g),
        (None, false) => ExtensionDatum::galois(&g),
    }
}

fn check_bound(config: &RunConfig, order: usize) -> Result<()> {
    match config.max_order {
        Some(m) if order > m => Err(Error::BoundExceeded {
            what: "group order",
            value: order,
            limit: m,
        }),
        _ => Ok(()),
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn type_counts(m: &BTreeMap<String, usize>) -> String {
    m.iter().map(|(k, v)| format!("{}:{}", k, v)).collect::<Vec<_>>().join(";")
}

#[derive(Serialize)]
struct CheckOutput {
    verdict: String,
    decided_by: String,
    witness: Option<WitnessOutput>,
    trace: Vec<String>,
}

#[derive(Serialize)]
struct WitnessOutput {
    type_name: String,
    generators: Vec<String>,
}

fn check(e: &ExtensionDatum, fmt: Format) -> Result<String> {
    let d = is_hopf_galois(e)?;
    let witness = d.witness.as_ref().map(|s| WitnessOutput {
        type_name: s.type_name.clone(),
        generators: s.generator_strings(),
    });
    match fmt {
        Format::Json => json(&CheckOutput {
            verdict: d.verdict.as_str().into(),
            decided_by: d.decided_by.as_str().into(),
            witness,
            trace: d.trace,
        }),
        Format::Csv => Ok(csv_line(&["verdict".into(), "decided_by".into(), "witness_type".into(), "witness".into()])
            + &csv_line(&[
                d.verdict.as_str().into(),
                d.decided_by.as_str().into(),
                witness.as_ref().map_or(String::new(), |w| w.type_name.clone()),
                witness.as_ref().map_or(String::new(), |w| w.generators.join(" ")),
            ])),
        Format::Text => {
            let mut s = format!("{}, decided_by={}\n", d.verdict, d.decided_by);
            if let Some(w) = witness {
                writeln!(s, "witness: {} = <{}>", w.type_name, w.generators.join(", ")).unwrap();
            }
            for t in &d.trace {
                writeln!(s, "  {}", t).unwrap();
            }
            Ok(s)
        }
    }
}

fn count(c: &CountReport, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(c),
        Format::Csv => {
            let mut s = csv_line(&["type".into(), "count".into()]);
            for (k, v) in &c.per_type {
                s += &csv_line(&[k.clone(), v.to_string()]);
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = format!("total: {}\n", c.total);
            for (k, v) in &c.per_type {
                writeln!(s, "  {}: {}", k, v).unwrap();
            }
            Ok(s)
        }
    }
}

/// `classify` output. Rows over the order bound appear in `skipped` when
/// skipping is enabled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyTable {
    pub degree: usize,
    pub rows: Vec<ClassifyRow>,
    #[serde(default)]
    pub skipped: Vec<String>,
}

pub fn classify_table(
    degree: usize,
    with_counts: bool,
    max_order: Option<usize>,
    skip_large: bool,
) -> Result<ClassifyTable> {
    let mut table = ClassifyTable {
        degree,
        rows: Vec::new(),
        skipped: Vec::new(),
    };
    for entry in transitive_groups(degree)? {
        if let Some(m) = max_order {
            if entry.order > m as u64 {
                if skip_large {
                    table.skipped.push(entry.name.clone());
                    continue;
                }
                return Err(Error::BoundExceeded {
                    what: "group order",
                    value: entry.order as usize,
                    limit: m,
                });
            }
        }
        table.rows.push(classify_entry(entry, with_counts)?);
    }
    Ok(table)
}

pub fn classify_output(t: &ClassifyTable, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(t),
        Format::Csv => {
            let mut s = csv_line(&[
                "name".into(),
                "order".into(),
                "verdict".into(),
                "decided_by".into(),
                "counts".into(),
            ]);
            for r in &t.rows {
                s += &csv_line(&[
                    r.name.clone(),
                    r.order.to_string(),
                    r.verdict.as_str().into(),
                    r.decided_by.as_str().into(),
                    type_counts(&r.per_type_counts),
                ]);
            }
            for name in &t.skipped {
                s += &csv_line(&[name.clone(), String::new(), "skipped".into(), String::new(), String::new()]);
            }
            Ok(s)
        }
        Format::Text => {
            let width = t.rows.iter().map(|r| r.name.chars().count()).chain(t.skipped.iter().map(|n| n.chars().count())).max().unwrap_or(4);
            let mut s = String::new();
            for r in &t.rows {
                let pad = width - r.name.chars().count();
                write!(s, "{}{}  {:>8}  {}  [{}]", r.name, " ".repeat(pad), r.order, r.verdict, r.decided_by).unwrap();
                if !r.per_type_counts.is_empty() {
                    write!(s, "  {}", type_counts(&r.per_type_counts)).unwrap();
                }
                s.push('\n');
            }
            for name in &t.skipped {
                writeln!(s, "{}{}  skipped", name, " ".repeat(width - name.chars().count())).unwrap();
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct LatticeEntry {
    index: usize,
    type_name: String,
    generators: Vec<String>,
    stable: Vec<StableEntry>,
    strong_form: bool,
    image_size: usize,
    intermediate_count: usize,
}

#[derive(Serialize)]
struct StableEntry {
    order: usize,
    generators: Vec<String>,
    /// Generators of the matching subgroup of `G`.
    fixing_group: Vec<String>,
    fixing_order: usize,
}

fn lattice(e: &ExtensionDatum, only: Option<usize>, fmt: Format) -> Result<String> {
    let structures = count_structures(e)?.structures;
    if let Some(i) = only {
        if i >= structures.len() {
            return Err(Error::Invalid(format!(
                "structure index {} out of range ({} structures)",
                i,
                structures.len()
            )));
        }
    }
    let mut entries = Vec::new();
    for (i, s) in structures.iter().enumerate() {
        if only.is_some_and(|j| j != i) {
            continue;
        }
        entries.push(lattice_entry(e, i, s)?);
    }
    match fmt {
        Format::Json => json(&entries),
        Format::Csv => {
            let mut s = csv_line(&[
                "structure".into(),
                "type".into(),
                "stable_order".into(),
                "stable_generators".into(),
                "fixing_order".into(),
                "fixing_generators".into(),
            ]);
            for en in &entries {
                for st in &en.stable {
                    s += &csv_line(&[
                        en.index.to_string(),
                        en.type_name.clone(),
                        st.order.to_string(),
                        st.generators.join(" "),
                        st.fixing_order.to_string(),
                        st.fixing_group.join(" "),
                    ]);
                }
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for en in &entries {
                writeln!(
                    s,
                    "structure {}: {} = <{}>  strong form: {} ({} of {} subgroups)",
                    en.index,
                    en.type_name,
                    en.generators.join(", "),
                    if en.strong_form { "holds" } else { "fails" },
                    en.image_size,
                    en.intermediate_count
                )
                .unwrap();
                for st in &en.stable {
                    writeln!(
                        s,
                        "  N' order {} <{}>  ->  subgroup of G order {} <{}>",
                        st.order,
                        st.generators.join(", "),
                        st.fixing_order,
                        st.fixing_group.join(", ")
                    )
                    .unwrap();
                }
            }
            Ok(s)
        }
    }
}

fn lattice_entry(e: &ExtensionDatum, index: usize, s: &HGStructure) -> Result<LatticeEntry> {
    let stable = stable_subgroup_records(s, e)?
        .into_iter()
        .map(|r| {
            let g = e.lambda_inverse_of(&r.corresponding_subgroup);
            StableEntry {
                order: r.subgroup.order(),
                generators: r.subgroup.generators().iter().map(|x| x.to_string()).collect(),
                fixing_group: g.generators().iter().map(|x| x.to_string()).collect(),
                fixing_order: g.order(),
            }
        })
        .collect();
    let sf = strong_form_holds(s, e)?;
    Ok(LatticeEntry {
        index,
        type_name: s.type_name.clone(),
        generators: s.generator_strings(),
        stable,
        strong_form: sf.holds,
        image_size: sf.image_subgroups.len(),
        intermediate_count: sf.all_intermediate_subgroups.len(),
    })
}

#[derive(Serialize)]
struct IntermediateReport {
    name: String,
    rows: Vec<IntermediateRow>,
}

fn intermediate(reports: &[IntermediateReport], fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(&reports),
        Format::Csv => {
            let mut s = csv_line(&["group".into(), "degree".into(), "classes".into(), "verdict".into()]);
            for r in reports {
                for row in &r.rows {
                    s += &csv_line(&[r.name.clone(), row.degree.to_string(), row.classes.to_string(), row.verdict.clone()]);
                }
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                writeln!(s, "{}", r.name).unwrap();
                for row in &r.rows {
                    writeln!(s, "  {:>4}  {}", row.degree, row.verdict).unwrap();
                }
            }
            Ok(s)
        }
    }
}

fn show_element(m: &BTreeMap<String, Vec<String>>) -> String {
    m.iter()
        .map(|(label, c)| format!("[{}]·{}", c.join(" "), label))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn descent(r: &DescentReport, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => {
            let mut s = csv_line(&["basis_index".into(), "element".into(), "coefficients".into()]);
            for (i, h) in r.hopf_basis.iter().enumerate() {
                for (label, c) in h {
                    s += &csv_line(&[i.to_string(), label.clone(), c.join(" ")]);
                }
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(f) = &r.field {
                writeln!(s, "field: {}", f).unwrap();
            }
            writeln!(s, "structure: {} = <{}>", r.structure_type, r.structure.join(", ")).unwrap();
            writeln!(s, "action convention: {} ({})", r.convention, r.convention_formula).unwrap();
            writeln!(s, "coefficients are coordinates on 1, t, t^2, ... for the primitive element t").unwrap();
            writeln!(s, "basis of H:").unwrap();
            for (i, h) in r.hopf_basis.iter().enumerate() {
                writeln!(s, "  h{} = {}", i, show_element(h)).unwrap();
            }
            writeln!(s, "basis of K:").unwrap();
            for (i, x) in r.k_basis.iter().enumerate() {
                writeln!(s, "  x{} = [{}]", i, x.join(" ")).unwrap();
            }
            writeln!(s, "action matrices on the basis of K:").unwrap();
            for (i, m) in r.action_matrices.iter().enumerate() {
                writeln!(s, "  h{}:", i).unwrap();
                for row in m {
                    writeln!(s, "    [{}]", row.join(" ")).unwrap();
                }
            }
            writeln!(s, "sub-Hopf algebras:").unwrap();
            for e in &r.sub_hopf {
                writeln!(
                    s,
                    "  N' order {} <{}>{}: dimension {}, fixed field dimension {}",
                    e.order,
                    e.subgroup.join(", "),
                    if e.stable { " (stable)" } else { "" },
                    e.dimension,
                    e.fixed_field.len()
                )
                .unwrap();
                for x in &e.fixed_field {
                    writeln!(s, "    [{}]", x.join(" ")).unwrap();
                }
            }
            writeln!(s, "K ⊗ H -> End(K) bijective: {}", r.hg_isomorphism).unwrap();
            Ok(s)
        }
    }
}

fn catalog(entries: &[&CatalogEntry], fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(&entries),
        Format::Csv => {
            let mut s = csv_line(&["name".into(), "degree".into(), "order".into(), "transitive".into(), "generators".into()]);
            for e in entries {
                s += &csv_line(&[
                    e.name.clone(),
                    e.degree.to_string(),
                    e.order.to_string(),
                    e.transitive.to_string(),
                    e.generators.join(" "),
                ]);
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for e in entries {
                writeln!(
                    s,
                    "{:>3} {:<16} order {:>9}  {}",
                    e.degree,
                    e.name,
                    e.order,
                    if e.generators.is_empty() { "(order only)".to_string() } else { e.generators.join(" ") }
                )
                .unwrap();
            }
            Ok(s)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolRow {
    pub name: String,
    pub order: usize,
    pub aut_order: usize,
    pub hol_order: usize,
}

/// Holomorph orders for all groups of order `n`, memoized as JSON under
/// `HGKIT_CACHE_DIR` when that is set.
pub fn hol_rows(n: usize) -> Result<Vec<HolRow>> {
    let cache = std::env::var_os("HGKIT_CACHE_DIR").map(|d| PathBuf::from(d).join(format!("hol-{}.json", n)));
    if let Some(path) = &cache {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(rows) = serde_json::from_str(&text) {
                return Ok(rows);
            }
        }
    }
    let rows: Vec<HolRow> = holomorph_orders(n)?
        .into_iter()
        .map(|(entry, hol)| HolRow {
            name: entry.name.clone(),
            order: n,
            aut_order: hol / n,
            hol_order: hol,
        })
        .collect();
    if let Some(path) = &cache {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, serde_json::to_string(&rows)?)?;
    }
    Ok(rows)
}

fn hol(rows: &[HolRow], fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut s = csv_line(&["name".into(), "order".into(), "aut_order".into(), "hol_order".into()]);
            for r in rows {
                s += &csv_line(&[r.name.clone(), r.order.to_string(), r.aut_order.to_string(), r.hol_order.to_string()]);
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                writeln!(s, "{:<12} |Aut| = {:>6}  |Hol| = {:>7}", r.name, r.aut_order, r.hol_order).unwrap();
            }
            Ok(s)
        }
    }
}

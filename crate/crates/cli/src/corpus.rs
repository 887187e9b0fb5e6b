//! Batch runs over a manifest.
//!
//! A manifest has one instance per line, `<id> <task> <graph> [<graph>]`,
//! with `#` comments. Tasks are `solve`, `construct` and `bounds` (two
//! graphs). A graph is a family call such as `random_cfdf(8)` or
//! `figure1`, or a file path relative to the manifest. Random families get
//! seeds drawn in manifest order from one generator seeded by `--seed`, so
//! the table does not depend on how lines are scheduled.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use powerdom::exact::{domination_number, gamma_p_exact, strong_support_count, zero_forcing_number, SearchLimits};
use powerdom::graph::{classify, generate, Family, Multigraph};
use powerdom::observe::verify_certificate;
use powerdom::products::{flaw_witness_search, pd_bounds, EqualityCase, PRODUCT_CAP};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{construct, read_graph, Failure};

const COLUMNS: [&str; 20] = [
    "id",
    "task",
    "g",
    "h",
    "n",
    "gamma_p",
    "gamma",
    "zero_forcing",
    "strong_support",
    "set_size",
    "bound",
    "lower_factor",
    "lower_vs",
    "upper_order",
    "upper_gamma_z",
    "exact",
    "equality_flags",
    "witness",
    "status",
    "detail",
];

struct Line {
    id: String,
    task: String,
    graphs: Vec<String>,
    seeds: [u64; 2],
}

#[derive(Default)]
struct Row {
    cells: std::collections::BTreeMap<&'static str, String>,
    failed: bool,
}

impl Row {
    fn set(&mut self, column: &'static str, value: impl ToString) {
        debug_assert!(COLUMNS.contains(&column));
        self.cells.insert(column, value.to_string());
    }

    fn render(&self) -> String {
        COLUMNS
            .iter()
            .map(|c| self.cells.get(c).map_or("-".to_string(), |v| v.replace([',', '\n'], ";")))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_manifest(text: &str, seed: u64) -> Result<Vec<Line>, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let arity = match fields.get(1) {
            Some(&"solve") | Some(&"construct") => 1,
            Some(&"bounds") => 2,
            _ => return Err(Failure::usage(format!("manifest line {}: unknown or missing task", i + 1))),
        };
        if fields.len() != 2 + arity {
            return Err(Failure::usage(format!("manifest line {}: expected {arity} graph(s)", i + 1)));
        }
        lines.push(Line {
            id: fields[0].to_string(),
            task: fields[1].to_string(),
            graphs: fields[2..].iter().map(|s| s.to_string()).collect(),
            seeds: [rng.next_u64(), rng.next_u64()],
        });
    }
    Ok(lines)
}

/// `name`, `name(a,b)` or a path.
fn load(spec: &str, seed: u64, base: &Path) -> Result<Multigraph, Failure> {
    let (name, params) = match spec.split_once('(') {
        Some((name, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| Failure::usage(format!("unbalanced `{spec}`")))?;
            let params = inner
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse::<usize>().map_err(|e| Failure::usage(format!("`{spec}`: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            (name, params)
        }
        None => (spec, Vec::new()),
    };
    match Family::parse(name, &params, seed) {
        Ok(f) => Ok(generate(&f)?),
        Err(_) if !spec.contains('(') && base.join(spec).exists() => read_graph(&base.join(spec)),
        Err(e) => Err(e.into()),
    }
}

fn set_text(set: &[usize]) -> String {
    set.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn solve(row: &mut Row, g: &Multigraph, limits: &SearchLimits) {
    let model = if g.is_simple() { powerdom::observe::Model::Vertex } else { powerdom::observe::Model::Edge };
    row.set("n", g.order());
    row.set("strong_support", strong_support_count(g));
    match gamma_p_exact(g, model, limits) {
        Ok(s) => {
            row.set("gamma_p", s.value);
            row.set("witness", set_text(&s.witness));
        }
        Err(e) => {
            row.set("status", if e.is_size_guard() { "size_guard" } else { "error" });
            row.set("detail", e);
            return;
        }
    }
    if let Ok(s) = domination_number(g, limits) {
        row.set("gamma", s.value);
    }
    if let Ok(s) = zero_forcing_number(g, limits) {
        row.set("zero_forcing", s.value);
    }
    row.set("status", "ok");
}

fn construct_row(row: &mut Row, g: &Multigraph) {
    row.set("n", g.order());
    match construct(g) {
        Ok(c) => {
            let verified = verify_certificate(&c.certificate, g);
            row.set("set_size", c.set().len());
            row.set("bound", c.certificate.bound);
            row.set("witness", set_text(c.set()));
            match verified {
                Ok(()) => row.set("status", "ok"),
                Err(e) => {
                    row.failed = true;
                    row.set("status", "verification_failed");
                    row.set("detail", e);
                }
            }
        }
        Err(e) => {
            row.failed = matches!(
                e,
                powerdom::construct::ConstructError::Internal(_) | powerdom::construct::ConstructError::Verification(_)
            );
            row.set("status", if row.failed { "verification_failed" } else { "rejected" });
            row.set("detail", e);
        }
    }
}

fn bounds_row(row: &mut Row, id: &str, g: &Multigraph, h: &Multigraph, limits: &SearchLimits, witnesses: &Path) {
    row.set("n", g.order() * h.order());
    let fits = g.order() * h.order() <= PRODUCT_CAP.min(limits.max_order);
    let report = match pd_bounds(g, h, fits, limits) {
        Ok(r) => r,
        Err(e) => {
            row.set("status", if e.is_size_guard() { "size_guard" } else { "error" });
            row.set("detail", e);
            return;
        }
    };
    row.set("lower_factor", report.lower_factor);
    row.set("lower_vs", report.lower_vs);
    row.set("upper_order", report.upper_order);
    row.set("upper_gamma_z", report.upper_gamma_z);
    if let Some(x) = report.exact {
        row.set("exact", x);
    }
    let flags: Vec<String> = report
        .equality_flags
        .iter()
        .map(|f| {
            let case = match f.case {
                EqualityCase::PathFactor => "path_factor",
                EqualityCase::DominatingVertex => "dominating_vertex",
                EqualityCase::StrongSupport => "strong_support",
            };
            format!("{case}{}={}", if f.swapped { "'" } else { "" }, f.value)
        })
        .collect();
    if !flags.is_empty() {
        row.set("equality_flags", flags.join(" "));
    }
    if fits && classify(h).tree {
        match flaw_witness_search(g, h, limits) {
            Ok(Some(w)) => {
                let path = witnesses.join(format!("{id}.json"));
                let text = serde_json::to_string_pretty(&w.to_json()).expect("witness serializes");
                if let Err(e) = fs::create_dir_all(witnesses).and_then(|_| fs::write(&path, text)) {
                    row.set("detail", format!("cannot write witness: {e}"));
                }
                row.set("witness", path.display());
            }
            Ok(None) => {}
            Err(e) => row.set("detail", format!("flaw search: {e}")),
        }
    }
    if report.consistent() {
        row.set("status", "ok");
    } else {
        row.failed = true;
        row.set("status", "bounds_violated");
    }
}

pub fn run(manifest: &Path, csv: &Path, seed: u64, limits: &SearchLimits) -> Result<(), Failure> {
    let text =
        fs::read_to_string(manifest).map_err(|e| Failure::usage(format!("cannot read {}: {e}", manifest.display())))?;
    let lines = parse_manifest(&text, seed)?;
    let base = manifest.parent().map(Path::to_path_buf).unwrap_or_default();
    let witnesses: PathBuf = csv.with_extension("witnesses");
    let rows: Vec<Row> = lines
        .par_iter()
        .map(|line| {
            let mut row = Row::default();
            row.set("id", &line.id);
            row.set("task", &line.task);
            row.set("g", &line.graphs[0]);
            if let Some(h) = line.graphs.get(1) {
                row.set("h", h);
            }
            let graphs: Result<Vec<Multigraph>, Failure> =
                line.graphs.iter().zip(line.seeds).map(|(s, seed)| load(s, seed, &base)).collect();
            match graphs {
                Err(f) => {
                    row.set("status", "error");
                    row.set("detail", f.message);
                }
                Ok(gs) => match line.task.as_str() {
                    "solve" => solve(&mut row, &gs[0], limits),
                    "construct" => construct_row(&mut row, &gs[0]),
                    _ => bounds_row(&mut row, &line.id, &gs[0], &gs[1], limits, &witnesses),
                },
            }
            row
        })
        .collect();
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for row in &rows {
        writeln!(out, "{}", row.render()).unwrap();
    }
    fs::write(csv, out).map_err(|e| Failure::usage(format!("cannot write {}: {e}", csv.display())))?;
    let failed = rows.iter().filter(|r| r.failed).count();
    eprintln!("{} instances, {failed} failed", rows.len());
    if failed > 0 {
        return Err(Failure::verification(format!("{failed} instance(s) failed verification")));
    }
    Ok(())
}

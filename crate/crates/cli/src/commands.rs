use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::io;
use std::path::Path;

use ngsplit::bijection::{self, KsTriple};
use ngsplit::census::{self, BalancedRatio, CensusRow};
use ngsplit::partition::{recognized_abc_partition, AbcPartition, KsPartition};
use ngsplit::sweep::{sweep_all, Catalog};
use ngsplit::{
    all_ks_partitions, classify as label_of, emit_graph6, oracle, profile, Graph, KsKind, VertexSet,
};
use serde::Serialize;

use crate::input::{read_records, Record};
use crate::{InputArgs, MapName, PartitionKind, Status};

fn names(set: VertexSet) -> String {
    set.iter()
        .map(|v| format!("v{}", v + 1))
        .collect::<Vec<_>>()
        .join(",")
}

fn emit<T: Serialize>(json: bool, record: &T, tsv: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string(record).expect("plain data"));
    } else {
        println!("{}", tsv());
    }
}

/// Records that parsed, reporting the others.
fn graphs(records: Vec<Record>, status: &mut Status) -> Vec<(usize, Graph)> {
    records
        .into_iter()
        .filter_map(|r| match r.graph {
            Ok(g) => Some((r.index, g)),
            Err(msg) => {
                status.parse(r.index, msg);
                None
            }
        })
        .collect()
}

#[derive(Serialize)]
struct ClassifyRecord {
    index: usize,
    n: usize,
    m: usize,
    labels: String,
    chi: Option<usize>,
}

pub fn classify(io: &InputArgs, use_oracle: bool, status: &mut Status) -> io::Result<()> {
    let records = read_records(io.input.as_deref(), io.format)?;
    let graphs = graphs(records, status);
    if !io.json && !graphs.is_empty() {
        println!("index\tn\tm\tlabels\tchi");
    }
    for (index, g) in graphs {
        let p = profile(&g);
        let label = p.classify();
        let chi = if label.split || label.ng3 {
            Some(p.split_index)
        } else if use_oracle {
            match oracle::chromatic_number(&g) {
                Ok(chi) => Some(chi),
                Err(e) => {
                    status.domain(index, e);
                    None
                }
            }
        } else {
            None
        };
        let rec = ClassifyRecord {
            index,
            n: g.order(),
            m: p.split_index,
            labels: label.to_string(),
            chi,
        };
        emit(io.json, &rec, || {
            let chi = rec.chi.map(|c| c.to_string()).unwrap_or_default();
            format!(
                "{}\t{}\t{}\t{}\t{}",
                rec.index, rec.n, rec.m, rec.labels, chi
            )
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct AbcRecord {
    index: usize,
    chi: usize,
    a: String,
    b: String,
    c: String,
    ng_kind: Option<String>,
}

#[derive(Serialize)]
struct KsRecord {
    index: usize,
    k: String,
    s: String,
    kind: String,
}

fn abc_for(g: &Graph, use_oracle: bool) -> Result<AbcPartition, String> {
    match recognized_abc_partition(g) {
        Ok(p) => Ok(p),
        Err(e) if !use_oracle => Err(format!(
            "{e}; pass --oracle to compute the chromatic number exactly"
        )),
        Err(_) => {
            let chi = oracle::chromatic_number(g).map_err(|e| e.to_string())?;
            ngsplit::abc_partition(g, chi).map_err(|e| e.to_string())
        }
    }
}

/// Labelled KS-partitions of `g`, or one per isomorphism class of triple.
fn ks_list(g: &Graph, unlabeled: bool) -> ngsplit::Result<Vec<KsPartition>> {
    let parts = all_ks_partitions(g)?;
    if !unlabeled {
        return Ok(parts);
    }
    let mut seen = HashSet::new();
    Ok(parts
        .into_iter()
        .filter(|p| {
            seen.insert(
                KsTriple {
                    graph: g.clone(),
                    partition: p.clone(),
                }
                .code(),
            )
        })
        .collect())
}

pub fn partition(
    io: &InputArgs,
    kind: PartitionKind,
    use_oracle: bool,
    unlabeled: bool,
    status: &mut Status,
) -> io::Result<()> {
    let records = read_records(io.input.as_deref(), io.format)?;
    let graphs = graphs(records, status);
    if !io.json && !graphs.is_empty() {
        match kind {
            PartitionKind::Abc => println!("index\tchi\tA\tB\tC\tng_kind"),
            PartitionKind::Ks => println!("index\tK\tS\tkind"),
        }
    }
    for (index, g) in graphs {
        match kind {
            PartitionKind::Abc => match abc_for(&g, use_oracle) {
                Err(msg) => status.domain(index, msg),
                Ok(p) => {
                    let rec = AbcRecord {
                        index,
                        chi: p.chi,
                        a: names(p.a),
                        b: names(p.b),
                        c: names(p.c),
                        ng_kind: p.ng_kind.map(|k| k.to_string()),
                    };
                    emit(io.json, &rec, || {
                        let kind = rec.ng_kind.clone().unwrap_or_else(|| "none".into());
                        format!(
                            "{}\t{}\t{}\t{}\t{}\t{}",
                            rec.index, rec.chi, rec.a, rec.b, rec.c, kind
                        )
                    });
                }
            },
            PartitionKind::Ks => match ks_list(&g, unlabeled) {
                Err(e) => status.domain(index, e),
                Ok(parts) => {
                    for p in parts {
                        let rec = KsRecord {
                            index,
                            k: names(p.k),
                            s: names(p.s),
                            kind: p.kind.to_string(),
                        };
                        emit(io.json, &rec, || {
                            format!("{}\t{}\t{}\t{}", rec.index, rec.k, rec.s, rec.kind)
                        });
                    }
                }
            },
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct MapRecord {
    index: usize,
    graph6: String,
    labels: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
}

fn pick_triple(g: &Graph, ks_index: Option<usize>, want_kmax: bool) -> Result<KsTriple, String> {
    let parts = all_ks_partitions(g).map_err(|e| e.to_string())?;
    let partition = match ks_index {
        Some(0) => return Err("--ks-index starts at 1".into()),
        Some(i) => parts
            .get(i - 1)
            .cloned()
            .ok_or_else(|| format!("graph has only {} KS-partitions", parts.len()))?,
        None if want_kmax => parts
            .into_iter()
            .find(|p| p.kind == KsKind::KMax)
            .ok_or("psi requires a K-max partition of an unbalanced graph")?,
        None => parts
            .into_iter()
            .next()
            .expect("split graphs have a KS-partition"),
    };
    Ok(KsTriple {
        graph: g.clone(),
        partition,
    })
}

fn apply(
    g: &Graph,
    map: MapName,
    target: Option<usize>,
    ks_index: Option<usize>,
) -> Result<MapRecord, String> {
    let need_target = || target.ok_or_else(|| "this map needs --target-n".to_string());
    let plain = |h: ngsplit::Result<Graph>| h.map(|h| (h, None)).map_err(|e| e.to_string());
    let (image, part) = match map {
        MapName::Ng1Remove => plain(bijection::ng1_remove(g))?,
        MapName::SplitToNg1 => plain(bijection::split_to_ng1(g))?,
        MapName::Ng1ToNg2 => plain(bijection::ng1_to_ng2(g))?,
        MapName::Ng2ToNg1 => plain(bijection::ng2_to_ng1(g))?,
        MapName::Ng3Shrink => plain(bijection::ng3_shrink(g))?,
        MapName::Ng3Grow => plain(bijection::ng3_grow(g, need_target()?))?,
        MapName::StripA => plain(bijection::strip_a(g))?,
        MapName::RebuildA => plain(bijection::rebuild_a(g, need_target()?))?,
        MapName::StripAb => plain(bijection::strip_ab(g))?,
        MapName::RebuildD => plain(bijection::rebuild_d(g, need_target()?))?,
        MapName::Phi | MapName::Psi => {
            let t = pick_triple(g, ks_index, map == MapName::Psi)?;
            let out = if map == MapName::Phi {
                bijection::phi(&t)
            } else {
                bijection::psi(&t)
            };
            let out = out.map_err(|e| e.to_string())?;
            (out.graph, Some(out.partition))
        }
    };
    Ok(MapRecord {
        index: 0,
        graph6: emit_graph6(&image),
        labels: label_of(&image).to_string(),
        k: part.as_ref().map(|p| names(p.k)),
        s: part.as_ref().map(|p| names(p.s)),
        kind: part.as_ref().map(|p| p.kind.to_string()),
    })
}

pub fn map(
    io: &InputArgs,
    map: MapName,
    target: Option<usize>,
    ks_index: Option<usize>,
    status: &mut Status,
) -> io::Result<()> {
    let records = read_records(io.input.as_deref(), io.format)?;
    for (index, g) in graphs(records, status) {
        match apply(&g, map, target, ks_index) {
            Err(msg) => status.domain(index, msg),
            Ok(mut rec) => {
                rec.index = index;
                emit(io.json, &rec, || {
                    let mut out = format!("{}\n# {}", rec.graph6, rec.labels);
                    if let (Some(k), Some(s), Some(kind)) = (&rec.k, &rec.s, &rec.kind) {
                        let _ = write!(out, "; K={{{k}}} S={{{s}}} {kind}");
                    }
                    out
                });
            }
        }
    }
    Ok(())
}

fn census_rows(
    max_n: Option<usize>,
    input: Option<&Path>,
    status: &mut Status,
) -> io::Result<Option<Vec<CensusRow>>> {
    if let Some(path) = input {
        let records = read_records(Some(path), crate::input::Format::G6)?;
        let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        for (_, g) in graphs(records, status) {
            by_n.entry(g.order()).or_default().push(g);
        }
        let mut rows = Vec::new();
        for (n, gs) in by_n {
            match census::tally(n, &gs) {
                Ok(row) => rows.push(row),
                Err(e) => {
                    eprintln!("n={n}: {e}");
                    status.fail(1);
                    return Ok(None);
                }
            }
        }
        census::fill_cumulative(&mut rows);
        return Ok(Some(rows));
    }
    let Some(max_n) = max_n else {
        eprintln!("error: census needs --max-n or --input");
        status.fail(2);
        return Ok(None);
    };
    match census::census_up_to(max_n) {
        Ok(rows) => Ok(Some(rows)),
        Err(e) => {
            eprintln!("error: {e}");
            status.fail(1);
            Ok(None)
        }
    }
}

fn print_table(rows: &[CensusRow]) {
    let mut lines: Vec<(&str, Vec<String>)> =
        vec![("n", rows.iter().map(|r| r.n.to_string()).collect())];
    let field =
        |f: fn(&CensusRow) -> u64| rows.iter().map(|r| f(r).to_string()).collect::<Vec<_>>();
    lines.push(("graphs", field(|r| r.graphs)));
    lines.push(("split", field(|r| r.split)));
    lines.push((
        "t_cum",
        rows.iter()
            .map(|r| r.t_cum.map(|t| t.to_string()).unwrap_or_else(|| "-".into()))
            .collect(),
    ));
    lines.push(("unbalanced", field(|r| r.unbalanced)));
    lines.push(("balanced", field(|r| r.balanced)));
    lines.push(("ng1", field(|r| r.ng1)));
    lines.push(("ng2", field(|r| r.ng2)));
    lines.push(("ng3", field(|r| r.ng3)));
    lines.push(("ng", field(|r| r.ng)));
    lines.push(("pseudo_split", field(|r| r.pseudo_split)));
    lines.push((
        "balanced/split",
        rows.iter()
            .map(|r| {
                if r.split == 0 {
                    "-".into()
                } else {
                    BalancedRatio::new(r.n, r.balanced, r.split).to_string()
                }
            })
            .collect(),
    ));
    let width = lines
        .iter()
        .flat_map(|(_, cells)| cells.iter().map(String::len))
        .max()
        .unwrap_or(1);
    for (name, cells) in lines {
        let body: Vec<String> = cells.iter().map(|c| format!("{c:>width$}")).collect();
        println!("{name:<14} {}", body.join(" "));
    }
}

pub fn census(
    max_n: Option<usize>,
    input: Option<&Path>,
    verify: bool,
    json: bool,
    jobs: Option<usize>,
    status: &mut Status,
) -> io::Result<()> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| io::Error::other(e.to_string()))?;
    }
    let Some(rows) = census_rows(max_n, input, status)? else {
        return Ok(());
    };
    if json {
        for r in &rows {
            println!("{}", serde_json::to_string(r).expect("plain data"));
        }
    } else {
        print_table(&rows);
    }
    if !verify {
        return Ok(());
    }

    // verification goes to stderr under --json so stdout stays one record per line
    let report_line = |line: String| {
        if json {
            eprintln!("{line}")
        } else {
            println!("{line}")
        }
    };
    let report = census::verify(&rows);
    for c in report.failures() {
        report_line(format!("FAIL {c}"));
    }
    report_line(format!(
        "identities: {} checked, {} failed",
        report.checks.len(),
        report.failures().count()
    ));
    if !report.ok() {
        status.fail(1);
    }
    if let Some(max_n) = max_n.filter(|_| input.is_none()) {
        let catalog = match Catalog::enumerate(max_n) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                status.fail(1);
                return Ok(());
            }
        };
        let sweeps = sweep_all(&catalog, max_n);
        for s in sweeps.iter().filter(|s| !s.ok()) {
            report_line(format!("FAIL sweep {s:?}"));
        }
        report_line(format!(
            "bijection sweeps: {} run, {} failed",
            sweeps.len(),
            sweeps.iter().filter(|s| !s.ok()).count()
        ));
        if sweeps.iter().any(|s| !s.ok()) {
            status.fail(1);
        }
    }
    Ok(())
}

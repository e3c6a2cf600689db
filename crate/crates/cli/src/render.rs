use std::io::{self, Write};

use pilat::{ComplementCensusRow, LatticeUniverse, Partition};
use serde_json::json;

use crate::VERSION;

pub const CENSUS_HEADER: &str = "partition,m,block_sizes,total,count_nm1,grieser";

fn sizes(row: &ComplementCensusRow) -> String {
    let s: Vec<String> = row.block_sizes.iter().map(usize::to_string).collect();
    s.join("+")
}

pub fn census_csv(n: usize, rows: &[ComplementCensusRow], w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "# pilat {VERSION} complements census n={n}")?;
    writeln!(w, "{CENSUS_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.partition,
            r.m,
            sizes(r),
            r.total,
            r.count_nm1,
            r.grieser
        )?;
    }
    Ok(())
}

pub fn census_json(n: usize, rows: &[ComplementCensusRow], w: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<_> = rows
        .iter()
        .map(|r| {
            json!({
                "partition": r.partition.to_string(),
                "m": r.m,
                "block_sizes": r.block_sizes,
                "total": r.total,
                "count_nm1": r.count_nm1,
                "grieser": r.grieser,
            })
        })
        .collect();
    writeln!(w, "{}", json!({"version": VERSION, "n": n, "rows": rows}))
}

pub fn census_text(rows: &[ComplementCensusRow], w: &mut dyn Write) -> io::Result<()> {
    let width = rows
        .iter()
        .map(|r| r.partition.to_string().len())
        .max()
        .unwrap_or(0)
        .max(9);
    writeln!(
        w,
        "{:<width$}  {:>3}  {:<12}  {:>8}  {:>9}  {:>8}",
        "partition", "m", "sizes", "total", "count_nm1", "grieser"
    )?;
    for r in rows {
        writeln!(
            w,
            "{:<width$}  {:>3}  {:<12}  {:>8}  {:>9}  {:>8}",
            r.partition.to_string(),
            r.m,
            sizes(r),
            r.total,
            r.count_nm1,
            r.grieser
        )?;
    }
    let agree = rows.iter().filter(|r| r.grieser_agrees()).count();
    writeln!(w, "grieser agreement: {agree}/{}", rows.len())
}

fn dot_header(w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "// pilat {VERSION}")?;
    writeln!(w, "digraph hasse {{")?;
    writeln!(w, "  rankdir=BT;")?;
    writeln!(w, "  node [shape=box, fontname=\"monospace\"];")
}

fn dot_nodes<'a>(nodes: impl IntoIterator<Item = &'a Partition>, w: &mut dyn Write) -> io::Result<()> {
    for (i, p) in nodes.into_iter().enumerate() {
        writeln!(w, "  p{i} [label=\"{p}\"];")?;
    }
    Ok(())
}

/// The full lattice: nodes in RGS order, one edge per covering pair, lower to upper.
pub fn hasse_lattice(u: &LatticeUniverse, w: &mut dyn Write) -> io::Result<()> {
    dot_header(w)?;
    dot_nodes(u, w)?;
    for (lo, hi) in u.covering_pairs() {
        writeln!(w, "  p{lo} -> p{hi};")?;
    }
    writeln!(w, "}}")
}

/// The order induced on `members`: an edge `x → y` when `x < y` and no member
/// lies strictly between. Nodes keep file order.
pub fn hasse_induced(members: &[Partition], w: &mut dyn Write) -> Result<(), crate::CommandError> {
    if let Some(bad) = members.iter().find(|p| p.n() != members[0].n()) {
        return Err(pilat::Error::GroundMismatch {
            left: members[0].n(),
            right: bad.n(),
        }
        .into());
    }
    let mut uniq: Vec<&Partition> = Vec::with_capacity(members.len());
    for p in members {
        if !uniq.contains(&p) {
            uniq.push(p);
        }
    }
    let lt = |a: &Partition, b: &Partition| a.lt(b).expect("common ground set");
    dot_header(w)?;
    dot_nodes(uniq.iter().copied(), w)?;
    for (i, a) in uniq.iter().enumerate() {
        for (j, b) in uniq.iter().enumerate() {
            if lt(a, b) && !uniq.iter().any(|c| lt(a, c) && lt(c, b)) {
                writeln!(w, "  p{i} -> p{j};")?;
            }
        }
    }
    writeln!(w, "}}")?;
    Ok(())
}

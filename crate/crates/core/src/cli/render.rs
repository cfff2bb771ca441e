use std::fmt::Write as _;

use crate::partition_check::{ExactVerdict, Report};

fn braces(members: &[String]) -> String {
    format!("{{{}}}", members.join(" "))
}

fn exact(v: &ExactVerdict) -> String {
    let mut s = String::from(if v.is_partition {
        "partition"
    } else {
        "not a partition"
    });
    if let Some(w) = &v.witness {
        write!(
            s,
            " (witness {} {}: {} blocks hold {} without {}, {} hold {} without {})",
            w.x, w.y, w.excluded_x_wrt_y, w.x, w.y, w.excluded_y_wrt_x, w.y, w.x
        )
        .unwrap();
    }
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(super) fn report_text(r: &Report) -> String {
    let mut out = String::new();
    let label_w = r.universe.iter().map(String::len).max().unwrap_or(1).max(1);

    writeln!(out, "universe: {}", r.universe.join(" ")).unwrap();
    writeln!(out).unwrap();

    writeln!(out, "blocks ({}):", r.blocks.len()).unwrap();
    let block_w = r
        .blocks
        .iter()
        .map(|b| braces(&b.members).len())
        .max()
        .unwrap_or(0);
    for b in &r.blocks {
        writeln!(
            out,
            "  {:<block_w$}  uniform={:<3} reducible={}",
            braces(&b.members),
            yes_no(b.uniform),
            yes_no(b.reducible)
        )
        .unwrap();
    }
    writeln!(out).unwrap();

    writeln!(out, "elements:").unwrap();
    writeln!(out, "  {:<label_w$}  degree  neighborhood", "x").unwrap();
    for e in &r.elements {
        writeln!(
            out,
            "  {:<label_w$}  {:<6}  {}",
            e.element,
            e.membership_degree,
            braces(&e.neighborhood)
        )
        .unwrap();
    }
    writeln!(out).unwrap();

    writeln!(out, "common block degrees:").unwrap();
    let cell_w = r
        .common_degrees
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(label_w);
    let mut header = format!("  {:<label_w$}", "");
    for l in &r.universe {
        write!(header, " {l:>cell_w$}").unwrap();
    }
    writeln!(out, "{}", header.trim_end()).unwrap();
    for (l, row) in r.universe.iter().zip(&r.common_degrees) {
        write!(out, "  {l:<label_w$}").unwrap();
        for v in row {
            write!(out, " {v:>cell_w$}").unwrap();
        }
        writeln!(out).unwrap();
    }
    writeln!(out).unwrap();

    writeln!(
        out,
        "neighborhood family ({}):",
        r.neighborhood_family.len()
    )
    .unwrap();
    for s in &r.neighborhood_family {
        writeln!(out, "  {}", braces(s)).unwrap();
    }
    writeln!(out).unwrap();

    writeln!(
        out,
        "reduct ({} of {} blocks):",
        r.reduct.len(),
        r.blocks.len()
    )
    .unwrap();
    for s in &r.reduct {
        writeln!(out, "  {}", braces(s)).unwrap();
    }
    writeln!(out).unwrap();

    writeln!(
        out,
        "uniform blocks: {} of {}",
        r.uniform_blocks,
        r.blocks.len()
    )
    .unwrap();
    writeln!(out).unwrap();

    writeln!(out, "verdicts:").unwrap();
    writeln!(
        out,
        "  excluded-number     {}",
        exact(&r.verdicts.excluded_number)
    )
    .unwrap();
    writeln!(out, "  oracle              {}", exact(&r.verdicts.oracle)).unwrap();
    writeln!(
        out,
        "  reduct-sufficient   {}",
        r.verdicts.reduct_sufficient.name()
    )
    .unwrap();
    writeln!(
        out,
        "  uniform-sufficient  {}",
        r.verdicts.uniform_sufficient.name()
    )
    .unwrap();
    writeln!(
        out,
        "verdict: {}",
        if r.is_partition {
            "partition"
        } else {
            "not a partition"
        }
    )
    .unwrap();
    out
}

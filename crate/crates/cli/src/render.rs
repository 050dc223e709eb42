//! Plain-text layouts for every listing the binary prints.

use std::fmt::Write as _;

use sedenion_core::boxkite::{
    roman, BoxKite, Compass, DnaResult, DonutMap, Label, LanyardCensus, OsirisPartition, Seam,
    SeinfeldCensus, SAILS, VENTS,
};
use sedenion_core::flowmorph::{CountingOrderReport, FanoLabeling, MorenoCopy};
use sedenion_core::pathion::{HyperBoxKite, HyperCensus};
use sedenion_core::zerodiv::GoToListing;
use sedenion_core::{CdAlgebra, Sedenions, Sign, Trio, TrioKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
    Pretty,
}

fn unit_label(sign: Sign, index: usize) -> String {
    let body = if index == 0 {
        "U".to_string()
    } else {
        index.to_string()
    };
    match sign {
        Sign::Plus => body,
        Sign::Minus => format!("-{body}"),
    }
}

/// The multiplication table. `pretty` uses the tab layout of the bundled
/// golden table (real unit as `U`); `csv` writes `+k`/`-k` cells under a
/// header row; `json` is a row-major array of `{sign, index}`.
pub fn table(alg: &CdAlgebra, format: TableFormat) -> String {
    let t = alg.emit_table();
    let dim = alg.dim();
    let mut out = String::new();
    match format {
        TableFormat::Pretty => {
            for j in 0..dim {
                out.push('\t');
                out.push_str(&unit_label(Sign::Plus, j));
            }
            out.push('\n');
            for (i, row) in t.iter().enumerate() {
                out.push_str(&unit_label(Sign::Plus, i));
                for &(s, k) in row {
                    out.push('\t');
                    out.push_str(&unit_label(s, k));
                }
                out.push('\n');
            }
        }
        TableFormat::Csv => {
            out.push_str("row");
            for j in 0..dim {
                let _ = write!(out, ",{j}");
            }
            out.push('\n');
            for (i, row) in t.iter().enumerate() {
                let _ = write!(out, "{i}");
                for &(s, k) in row {
                    let _ = write!(out, ",{}{k}", s.symbol());
                }
                out.push('\n');
            }
        }
        TableFormat::Json => {
            let rows: Vec<Vec<serde_json::Value>> = t
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&(s, k)| serde_json::json!({ "sign": s.to_i64(), "index": k }))
                        .collect()
                })
                .collect();
            out = serde_json::to_string(&rows).expect("plain values serialize");
            out.push('\n');
        }
    }
    out
}

pub fn trips(alg: &CdAlgebra) -> String {
    let mut out = String::new();
    let mut level = 0;
    for t in alg.triples() {
        let top = usize::BITS
            - t.as_array()
                .iter()
                .max()
                .copied()
                .unwrap_or(1)
                .leading_zeros();
        if top != level {
            level = top;
            let _ = writeln!(out, "# new at dimension {}", 1usize << top);
        }
        let _ = writeln!(out, "{t}");
    }
    out
}

pub fn assessors(sed: &Sedenions) -> String {
    let mut out = String::from("assessor\tkite\tg\n");
    for a in sed.enumerate_assessors() {
        let _ = writeln!(out, "{a}\t{}\t{}", roman(a.kite()).unwrap_or("?"), a.g());
    }
    out
}

fn kind_name(k: TrioKind) -> &'static str {
    match k {
        TrioKind::Zigzag => "zigzag",
        TrioKind::Trefoil => "trefoil",
    }
}

fn trio_line(t: &Trio) -> String {
    let signs: String = t.edge_signs.iter().map(|s| s.symbol()).collect();
    format!(
        "{} {} {}\t{}\t{}\t{}",
        t.members[0],
        t.members[1],
        t.members[2],
        t.otrip,
        kind_name(t.kind),
        signs
    )
}

pub fn trios(sed: &Sedenions) -> String {
    let mut out = String::from("members\to-trip\tkind\tsigns\n");
    for t in sed.enumerate_trios() {
        out.push_str(&trio_line(&t));
        out.push('\n');
    }
    out
}

pub fn couplings(sed: &Sedenions) -> String {
    let mut out = String::new();
    for c in sed.enumerate_couplings() {
        let _ = writeln!(out, "{c}");
    }
    out
}

/// One GoTo listing in its tabular layout: three rows of columns 1..3,
/// then three rows holding column 4.
pub fn goto(l: &GoToListing) -> String {
    let units: Vec<String> = l
        .automorpheme
        .units()
        .iter()
        .map(|u| u.to_string())
        .collect();
    let mut out = format!(
        "GoTo #{}\tBased on Octonion Triplet {}\tAutomorpheme: ({})\n",
        l.number,
        l.otrip(),
        units.join(", ")
    );
    for r in 0..3 {
        let cells: Vec<String> = l.columns[..3]
            .iter()
            .map(|c| c.cycle[r].to_string())
            .collect();
        let _ = writeln!(out, "\t{}", cells.join("\t"));
    }
    for r in 0..3 {
        let _ = writeln!(out, "\t\t\t{}", l.columns[3].cycle[r]);
    }
    let excluded: Vec<String> = l
        .automorpheme
        .excluded()
        .iter()
        .map(|u| u.to_string())
        .collect();
    let _ = writeln!(out, "excluded: {{{}}}", excluded.join(", "));
    out
}

pub fn osiris(p: &OsirisPartition, stripped: bool) -> String {
    let mut out = String::from("o\\S\t9\t10\t11\t12\t13\t14\t15\n");
    for (o, row) in p.cells.iter().enumerate() {
        out.push_str(&(o + 1).to_string());
        for cell in row {
            out.push('\t');
            let Some(c) = cell else { continue };
            if stripped {
                out.push_str(roman(c.kite).unwrap_or("?"));
                continue;
            }
            let entries: Vec<String> = c
                .entries
                .iter()
                .map(|e| {
                    let [p, q] = e.partners;
                    format!("{} ({},{}) ({},{})", e.goto, p.o(), p.s(), q.o(), q.s())
                })
                .collect();
            out.push_str(&entries.join(" "));
        }
        out.push('\n');
    }
    out
}

/// Rows in the layout of the bundled strut table.
pub fn strut_table(kites: &[BoxKite]) -> String {
    let mut out = String::from("Box-Kite\tGoTo #s\tA\tB\tC\tD\tE\tF\n");
    for k in kites {
        let g: Vec<String> = k.goto_ids.iter().map(|g| g.to_string()).collect();
        let _ = write!(out, "{}\t{}", k.name(), g.join(", "));
        for v in k.vertices {
            let _ = write!(out, "\t{}, {}", v.o(), v.s());
        }
        out.push('\n');
    }
    out
}

pub fn box_kite(sed: &Sedenions, k: &BoxKite) -> String {
    let mut out = format!("Box-Kite {} (strut signature {})\n", k.name(), k.signature);
    for l in Label::ALL {
        let _ = writeln!(out, "  {l} {}", k.vertex(l));
    }
    let struts: Vec<String> = k.struts().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    let _ = writeln!(out, "struts: {}", struts.join("  "));
    for (i, (s, labels)) in k.sails.iter().zip(SAILS).enumerate() {
        let name: String = labels.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(out, "sail {name} GoTo #{}: {}", k.goto_ids[i], trio_line(s));
    }
    for (v, labels) in k.vents.iter().zip(VENTS) {
        let name: String = labels.iter().map(|l| l.to_string()).collect();
        let signs: String = v.edge_signs.iter().map(|s| s.symbol()).collect();
        let _ = writeln!(out, "vent {name}: {}\t{signs}", kind_name(v.kind));
    }
    if let Ok(cycle) = sedenion_core::boxkite::strut_plane_cycle(sed, k) {
        let sums: Vec<String> = cycle.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(out, "strut planes: {}", sums.join(" -> "));
    }
    out
}

pub fn lanyards(k: &BoxKite, c: &LanyardCensus) -> String {
    let mut out = format!(
        "Box-Kite {} lanyards up to length {}\n",
        k.name(),
        c.max_len
    );
    out.push_str("length\tcycles\tcomplete\n");
    for (len, n) in &c.by_length {
        let _ = writeln!(out, "{len}\t{}\t{}", n.cycles, n.complete);
    }
    let _ = writeln!(out, "tray-racks\t{}", c.tray_racks);
    let _ = writeln!(out, "butterflies\t{}", c.butterflies);
    let _ = writeln!(out, "perimeters\t{}", c.perimeters);
    let _ = writeln!(out, "waltz bands\t{}", c.waltz_bands);
    let _ = writeln!(out, "cat's cradles\t{}", c.cats_cradles);
    let _ = writeln!(out, "double zigzags\t{}", c.double_zigzags);
    for (len, n) in &c.missing_links {
        let _ = writeln!(out, "missing link strands of {len}\t{n}");
    }
    let _ = writeln!(out, "triangular faces odd\t{}", c.faces_odd);
    let _ = writeln!(out, "squares even\t{}", c.squares_even);
    out
}

pub fn dna(k: &BoxKite, position: usize, r: &DnaResult) -> String {
    let name = |s: u8| roman(s).unwrap_or("?");
    let mut out = format!("Box-Kite {} strut pairing {position}\n", k.name());
    let _ = writeln!(out, "  {}", r.top);
    let _ = writeln!(out, "  {}", r.bottom);
    let _ = writeln!(
        out,
        "column twist   -> {}\t{}\t(Box-Kite {})",
        r.column.products[0],
        r.column.products[1],
        name(r.column.target)
    );
    let _ = writeln!(
        out,
        "diagonal twist -> {}\t{}\t(Box-Kite {})",
        r.diagonal.products[0],
        r.diagonal.products[1],
        name(r.diagonal.target)
    );
    out
}

pub fn seinfeld(k: &BoxKite, c: &SeinfeldCensus) -> String {
    let mut out = format!("Box-Kite {} Seinfeld census\n", k.name());
    for (i, n) in c.cases.iter().enumerate() {
        let _ = writeln!(out, "case {}\t{n}", i + 1);
    }
    let _ = writeln!(out, "case 3 over all edges\t{}", c.case3_all_edges);
    let _ = writeln!(out, "hyperplanes\t{}", c.hyperplanes);
    let _ = writeln!(
        out,
        "samples\t{} per configuration, {} checked, all zero: {}",
        c.samples_per_configuration, c.samples_checked, c.samples_zero
    );
    out
}

pub fn donut(d: &DonutMap) -> String {
    let mut out = format!("Donut for GoTo #{} on {}\n", d.goto, d.otrip);
    for c in Compass::ALL {
        let t = d.triangle(c);
        let _ = writeln!(
            out,
            "{c:?}\tBox-Kite {}\t{}",
            roman(t.kite).unwrap_or("?"),
            trio_line(&t.trio)
        );
    }
    let list = |xs: [sedenion_core::Assessor; 4]| xs.map(|a| a.to_string()).join(" ");
    let _ = writeln!(out, "center\t{}", list(d.center()));
    let _ = writeln!(out, "north/south\t{}", list(d.north_south()));
    let _ = writeln!(out, "west/east\t{}", list(d.west_east()));
    for p in &d.pastings {
        let seam = match p.seam {
            Seam::HalfDiagonal => "half-diagonal",
            Seam::Side => "side",
        };
        let _ = writeln!(
            out,
            "{seam}\t{:?} {} <-> {:?} {}",
            p.from.0, p.from.1, p.to.0, p.to.1
        );
    }
    out
}

pub fn fano_labeling(l: &FanoLabeling) -> String {
    let mut out = format!("{l}\n");
    let off = l.out_of_counting_order();
    let _ = writeln!(out, "out of counting order: {}", off.len());
    for t in off {
        let _ = writeln!(out, "  ({}, {}, {})", t[0], t[1], t[2]);
    }
    out
}

pub fn reversal_counts(counts: &std::collections::BTreeMap<usize, usize>) -> String {
    let mut out = String::from("reversed lines\tsign patterns\n");
    for (k, n) in counts {
        let _ = writeln!(out, "{k}\t{n}");
    }
    out
}

pub fn moreno(copy: &MorenoCopy, missigned: &[sedenion_core::Triple], flowmorphic: bool) -> String {
    let [a, b, y] = copy.generators;
    let mut out = format!("(a, b, y) = ({a}, {b}, {y})\ncopy: {copy}\n");
    let _ = writeln!(
        out,
        "harbors zero-divisors: {}",
        copy.harbors_zero_divisors()
    );
    let _ = writeln!(out, "flowmorphic: {flowmorphic}");
    let _ = writeln!(out, "mis-signed: {}", missigned.len());
    for t in missigned {
        let _ = writeln!(out, "  {t}");
    }
    out
}

pub fn counting_order(r: &CountingOrderReport) -> String {
    let fmt_lines = |v: &[[usize; 3]]| {
        v.iter()
            .map(|t| format!("({}, {}, {})", t[0], t[1], t[2]))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!("canonical out of order: {}\n", fmt_lines(&r.canonical));
    let _ = writeln!(out, "after flipping e6: {}", fmt_lines(&r.flip_six));
    let _ = writeln!(out, "minimum over 128 sign patterns: {}", r.minimum);
    let _ = writeln!(out, "minimizing patterns: {}", r.minimizers.len());
    let _ = writeln!(out, "all seven in counting order: {}", r.zero_attainable);
    out.push_str(&reversal_counts(&r.reversal_counts));
    out
}

pub fn pathion(k: &HyperBoxKite, c: &HyperCensus) -> String {
    let mut out = format!(
        "hyper-box-kite N = {} signature {}{}\n",
        k.dim_exp,
        k.signature,
        if k.is_maximal() { " (maximal)" } else { "" }
    );
    for (a, b) in &k.struts {
        let _ = writeln!(out, "  {a} <-> {b}");
    }
    let _ = writeln!(out, "vertices\t{}", c.vertices);
    let _ = writeln!(out, "pairs\t{}", c.pairs);
    let _ = writeln!(out, "struts\t{}", c.struts);
    let _ = writeln!(out, "zero-dividing edges\t{}", c.edges);
    let _ = writeln!(out, "silent pairs\t{}", c.silent_pairs);
    let _ = writeln!(out, "zero-dividing struts\t{}", c.zero_struts);
    let _ = writeln!(
        out,
        "trios\t{} ({} zigzag, {} trefoil)",
        c.trios, c.zigzags, c.trefoils
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretty_octonions() {
        let t = table(&CdAlgebra::new(3).unwrap(), TableFormat::Pretty);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "\tU\t1\t2\t3\t4\t5\t6\t7");
        assert_eq!(lines[2], "1\t1\t-U\t3\t-2\t5\t-4\t-7\t6");
    }

    #[test]
    fn csv_header_and_cells() {
        let t = table(&CdAlgebra::new(2).unwrap(), TableFormat::Csv);
        assert_eq!(t.lines().next(), Some("row,0,1,2,3"));
        assert_eq!(t.lines().nth(2), Some("1,+1,-0,+3,-2"));
    }

    #[test]
    fn json_cells() {
        let t = table(&CdAlgebra::new(1).unwrap(), TableFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&t).unwrap();
        assert_eq!(v[1][1], serde_json::json!({"sign": -1, "index": 0}));
    }
}

//! Graphviz exports. Output is a pure function of the target, so repeated
//! runs are byte-identical.

use std::fmt::Write as _;
use std::str::FromStr;

use sedenion_core::boxkite::{
    box_kite, donut_map, parse_kite, roman, BoxKite, Compass, DonutMap, Label, Seam,
};
use sedenion_core::flowmorph::{apply_sign_pattern, canonical_fano, FanoLabeling, SignPattern};
use sedenion_core::pathion::{hyper_box_kite, HyperBoxKite};
use sedenion_core::{Sedenions, Sign, Triple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExportTarget {
    /// `boxkite:III`
    BoxKite(u8),
    /// `donut:1,2,3`
    Donut([usize; 3]),
    /// `fano` or `fano:6,7` (units to re-sign)
    Fano(Vec<usize>),
    /// `pathion:5,15`
    Pathion(u32, usize),
}

fn numbers(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("not a number: {x:?}")))
        .collect()
}

impl FromStr for ExportTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        match kind {
            "boxkite" => parse_kite(arg)
                .map(ExportTarget::BoxKite)
                .map_err(|e| e.to_string()),
            "donut" => {
                let v = numbers(arg)?;
                <[usize; 3]>::try_from(v)
                    .map(ExportTarget::Donut)
                    .map_err(|_| "donut needs an O-trip a,b,c".to_string())
            }
            "fano" if arg.is_empty() => Ok(ExportTarget::Fano(Vec::new())),
            "fano" => numbers(arg).map(ExportTarget::Fano),
            "pathion" => match numbers(arg)?.as_slice() {
                [n, s] => Ok(ExportTarget::Pathion(*n as u32, *s)),
                _ => Err("pathion needs N,signature".to_string()),
            },
            _ => Err(format!(
                "unknown target {s:?}; expected boxkite:K, donut:a,b,c, fano[:units] or pathion:N,S"
            )),
        }
    }
}

pub fn render(sed: &Sedenions, target: &ExportTarget) -> Result<String, String> {
    match target {
        ExportTarget::BoxKite(s) => box_kite(sed, *s)
            .map(|k| box_kite_dot(sed, &k))
            .map_err(|e| e.to_string()),
        ExportTarget::Donut(t) => sed
            .otrip_of(*t)
            .and_then(|t| donut_map(sed, t))
            .map(|d| donut_dot(&d))
            .map_err(|e| e.to_string()),
        ExportTarget::Fano(units) => {
            let pattern = SignPattern::new(units).map_err(|e| e.to_string())?;
            let (l, _) = apply_sign_pattern(&canonical_fano(), pattern);
            Ok(fano_dot(&l))
        }
        ExportTarget::Pathion(n, s) => hyper_box_kite(*n, *s)
            .map(|k| pathion_dot(&k))
            .map_err(|e| e.to_string()),
    }
}

fn sign_label(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

/// Six vertices, twelve signed edges, three dashed struts.
pub fn box_kite_dot(sed: &Sedenions, k: &BoxKite) -> String {
    let mut out = format!("graph boxkite_{} {{\n", k.name());
    let _ = writeln!(
        out,
        "  label=\"Box-Kite {} (strut signature {})\";",
        k.name(),
        k.signature
    );
    out.push_str("  node [shape=circle];\n");
    for l in Label::ALL {
        let v = k.vertex(l);
        let _ = writeln!(out, "  {l} [label=\"{l}\\n{}, {}\"];", v.o(), v.s());
    }
    for (x, y) in k.edges() {
        let sign = sed
            .edge_sign(k.vertex(x), k.vertex(y))
            .map(sign_label)
            .unwrap_or("?");
        let _ = writeln!(out, "  {x} -- {y} [label=\"{sign}\"];");
    }
    for (x, y) in sedenion_core::boxkite::STRUTS {
        let _ = writeln!(out, "  {x} -- {y} [style=dashed, label=\"strut\"];");
    }
    out.push_str("}\n");
    out
}

fn compass_corners(c: Compass) -> [(&'static str, (i32, i32)); 2] {
    match c {
        Compass::North => [("nw", (-2, 2)), ("ne", (2, 2))],
        Compass::East => [("ne", (2, 2)), ("se", (2, -2))],
        Compass::South => [("se", (2, -2)), ("sw", (-2, -2))],
        Compass::West => [("sw", (-2, -2)), ("nw", (-2, 2))],
    }
}

/// Square with diagonals: four triangles meeting at the center, each a
/// trio on its own kite, with twist pastings drawn as dotted arcs.
pub fn donut_dot(d: &DonutMap) -> String {
    let mut out = format!("graph donut_{} {{\n", d.goto);
    let _ = writeln!(
        out,
        "  label=\"Donut for GoTo #{} on {}\";",
        d.goto, d.otrip
    );
    out.push_str("  layout=neato;\n  node [shape=box, fontsize=10];\n");
    for c in Compass::ALL {
        let t = d.triangle(c);
        let tag = format!("{c:?}").to_lowercase();
        let [(n1, p1), (n2, p2)] = compass_corners(c);
        // shift each triangle's copy of a shared point toward its own interior
        let (cx, cy) = match c {
            Compass::North => (0, 1),
            Compass::East => (1, 0),
            Compass::South => (0, -1),
            Compass::West => (-1, 0),
        };
        let [m0, m1, m2] = t.trio.members;
        let (a, b) = if matches!(c, Compass::North | Compass::South) {
            (m1, m2)
        } else {
            (m2, m1)
        };
        let _ = writeln!(out, "  {tag}_c [label=\"{m0}\", pos=\"{cx},{cy}!\"];");
        let _ = writeln!(
            out,
            "  {tag}_{n1} [label=\"{a}\", pos=\"{},{}!\"];",
            p1.0 + cx,
            p1.1 + cy
        );
        let _ = writeln!(
            out,
            "  {tag}_{n2} [label=\"{b}\", pos=\"{},{}!\"];",
            p2.0 + cx,
            p2.1 + cy
        );
        let _ = writeln!(
            out,
            "  {tag}_label [shape=plaintext, label=\"{} {}\", pos=\"{},{}!\"];",
            roman(t.kite).unwrap_or("?"),
            match t.trio.kind {
                sedenion_core::TrioKind::Zigzag => "zigzag",
                sedenion_core::TrioKind::Trefoil => "trefoil",
            },
            cx * 2,
            cy * 2
        );
        let s = t.trio.edge_signs;
        let _ = writeln!(
            out,
            "  {tag}_c -- {tag}_{n1} [label=\"{}\"];",
            sign_label(s[0])
        );
        let _ = writeln!(
            out,
            "  {tag}_{n1} -- {tag}_{n2} [label=\"{}\"];",
            sign_label(s[1])
        );
        let _ = writeln!(
            out,
            "  {tag}_{n2} -- {tag}_c [label=\"{}\"];",
            sign_label(s[2])
        );
    }
    for p in &d.pastings {
        let style = match p.seam {
            Seam::HalfDiagonal => "dotted",
            Seam::Side => "dashed",
        };
        let from = format!("{:?}", p.from.0).to_lowercase();
        let to = format!("{:?}", p.to.0).to_lowercase();
        let _ = writeln!(
            out,
            "  {from}_label -- {to}_label [style={style}, constraint=false, label=\"{} ~ {}\"];",
            p.from.1, p.to.1
        );
    }
    out.push_str("}\n");
    out
}

/// Seven points and the seven lines as oriented 3-cycles.
pub fn fano_dot(l: &FanoLabeling) -> String {
    const COLORS: [&str; 7] = ["red", "orange", "gold", "green", "blue", "indigo", "violet"];
    let mut out = String::from("digraph fano {\n  node [shape=circle];\n");
    for p in l.points() {
        let _ = writeln!(out, "  e{p} [label=\"{p}\"];");
    }
    for (line, color) in l.lines().iter().zip(COLORS) {
        let t = Triple {
            a: line[0],
            b: line[1],
            c: line[2],
        };
        for i in 0..3 {
            let _ = writeln!(
                out,
                "  e{} -> e{} [color={color}, tooltip=\"{t}\"];",
                line[i],
                line[(i + 1) % 3]
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Vertices with their struts.
pub fn pathion_dot(k: &HyperBoxKite) -> String {
    let mut out = format!("graph hyperkite_{}_{} {{\n", k.dim_exp, k.signature);
    let _ = writeln!(
        out,
        "  label=\"hyper-box-kite N = {} signature {}\";\n  node [shape=circle];",
        k.dim_exp, k.signature
    );
    for v in &k.vertices {
        let _ = writeln!(out, "  v{}_{} [label=\"{}, {}\"];", v.o, v.s, v.o, v.s);
    }
    for (a, b) in &k.struts {
        let _ = writeln!(
            out,
            "  v{}_{} -- v{}_{} [style=dashed];",
            a.o, a.s, b.o, b.s
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_parse() {
        assert_eq!("boxkite:III".parse(), Ok(ExportTarget::BoxKite(3)));
        assert_eq!("donut:1,2,3".parse(), Ok(ExportTarget::Donut([1, 2, 3])));
        assert_eq!("fano".parse(), Ok(ExportTarget::Fano(vec![])));
        assert_eq!("pathion:5,15".parse(), Ok(ExportTarget::Pathion(5, 15)));
        assert!("kite:3".parse::<ExportTarget>().is_err());
    }

    #[test]
    fn kite_three_shape() {
        let sed = Sedenions::new();
        let dot = render(&sed, &ExportTarget::BoxKite(3)).unwrap();
        assert_eq!(
            dot.matches("label=\"+\"").count() + dot.matches("label=\"-\"").count(),
            12
        );
        assert_eq!(dot.matches("style=dashed").count(), 3);
        assert_eq!(
            dot.lines()
                .filter(|l| l.contains("[label=\"") && l.contains("\\n"))
                .count(),
            6
        );
    }

    #[test]
    fn fano_shape() {
        let dot = fano_dot(&canonical_fano());
        assert_eq!(dot.matches(" -> ").count(), 21);
        assert_eq!(dot.matches("shape=circle").count(), 1);
    }
}

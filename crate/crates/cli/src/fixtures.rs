//! Golden tables bundled with the binary, and their parsers.
//!
//! Each table is kept as printed, misprints included; the `*_exceptions`
//! files name the cells known to be wrong so comparisons can separate a
//! misprint from a regression.

use std::collections::BTreeMap;
use std::fmt;

use sedenion_core::Sign;

pub const SEDENION_TABLE: &str = include_str!("../fixtures/sedenion_table.tsv");
pub const TABLE_EXCEPTIONS: &str = include_str!("../fixtures/table_exceptions.tsv");
pub const TRIPS: &str = include_str!("../fixtures/trips.txt");
pub const GOTO_LISTINGS: &str = include_str!("../fixtures/goto_listings.tsv");
pub const OSIRIS: &str = include_str!("../fixtures/osiris.tsv");
pub const OSIRIS_EXCEPTIONS: &str = include_str!("../fixtures/osiris_exceptions.tsv");
pub const STRUT_TABLE: &str = include_str!("../fixtures/strut_table.tsv");

/// Strut pairs of the maximal 32-dimensional kite, as printed.
pub const PATHION_STRUTS: [((usize, usize), (usize, usize)); 7] = [
    ((1, 30), (14, 17)),
    ((2, 29), (13, 18)),
    ((3, 28), (12, 19)),
    ((4, 27), (11, 20)),
    ((5, 26), (10, 21)),
    ((6, 25), (9, 22)),
    ((7, 24), (8, 23)),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub fixture: &'static str,
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} line {}: {}", self.fixture, self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(fixture: &'static str, line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        fixture,
        line,
        message: message.into(),
    }
}

/// A signed basis unit as it appears in a printed cell: `U`, `-U`, `7`, `-13`.
pub fn parse_cell(cell: &str) -> Option<(Sign, usize)> {
    let cell = cell.trim();
    let (sign, body) = match cell.strip_prefix('-') {
        Some(rest) => (Sign::Minus, rest),
        None => (Sign::Plus, cell),
    };
    if body == "U" {
        return Some((sign, 0));
    }
    body.parse().ok().map(|i| (sign, i))
}

fn row_label(s: &str) -> Option<usize> {
    if s == "U" {
        Some(0)
    } else {
        s.parse().ok()
    }
}

/// The printed 16x16 table, rows and columns by basis index.
pub fn sedenion_table() -> Result<Vec<Vec<(Sign, usize)>>, ParseError> {
    let mut lines = SEDENION_TABLE.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| err("sedenion_table", 1, "empty"))?;
    let cols: Vec<Option<usize>> = header.split('\t').skip(1).map(row_label).collect();
    if cols.len() != 16 || cols.iter().enumerate().any(|(i, c)| *c != Some(i)) {
        return Err(err("sedenion_table", 1, "header is not U, 1..15"));
    }
    let mut rows = Vec::with_capacity(16);
    for (n, line) in lines {
        let mut fields = line.split('\t');
        let label = fields.next().and_then(row_label);
        if label != Some(rows.len()) {
            return Err(err("sedenion_table", n + 1, "row label out of sequence"));
        }
        let row: Option<Vec<(Sign, usize)>> = fields.map(parse_cell).collect();
        match row {
            Some(r) if r.len() == 16 => rows.push(r),
            _ => return Err(err("sedenion_table", n + 1, "expected 16 signed cells")),
        }
    }
    if rows.len() != 16 {
        return Err(err("sedenion_table", rows.len() + 1, "expected 16 rows"));
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableException {
    pub row: usize,
    pub col: usize,
    pub printed: (Sign, usize),
    pub expected: (Sign, usize),
    pub note: String,
}

pub fn table_exceptions() -> Result<Vec<TableException>, ParseError> {
    let mut out = Vec::new();
    for (n, line) in TABLE_EXCEPTIONS.lines().enumerate().skip(1) {
        let f: Vec<&str> = line.split('\t').collect();
        let parsed = (|| {
            Some(TableException {
                row: row_label(f.first()?)?,
                col: row_label(f.get(1)?)?,
                printed: parse_cell(f.get(2)?)?,
                expected: parse_cell(f.get(3)?)?,
                note: f.get(4).unwrap_or(&"").to_string(),
            })
        })();
        out.push(parsed.ok_or_else(|| err("table_exceptions", n + 1, "malformed row"))?);
    }
    Ok(out)
}

/// All `(a, b, c)` groups in a line, in order.
pub fn parse_triples(line: &str) -> Vec<[usize; 3]> {
    line.split('(')
        .skip(1)
        .filter_map(|chunk| {
            let body = chunk.split(')').next()?;
            let v: Vec<usize> = body
                .split(',')
                .map(|x| x.trim().parse().ok())
                .collect::<Option<_>>()?;
            <[usize; 3]>::try_from(v).ok()
        })
        .collect()
}

pub type Triples = Vec<[usize; 3]>;

/// The seven O-trips and the 28 S-trips.
pub fn trips() -> Result<(Triples, Triples), ParseError> {
    let mut lines = TRIPS.lines();
    let otrips = parse_triples(lines.next().unwrap_or(""));
    let strips: Vec<[usize; 3]> = lines.flat_map(parse_triples).collect();
    if otrips.len() != 7 || strips.len() != 28 {
        return Err(err(
            "trips",
            1,
            format!("found {} + {} triples", otrips.len(), strips.len()),
        ));
    }
    Ok((otrips, strips))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoToFixture {
    pub number: usize,
    pub otrip: [usize; 3],
    pub automorpheme: [usize; 7],
    /// First half of each trio's 6-cycle, whitespace squeezed: `(1+13)(2-14)`.
    pub columns: [[String; 3]; 4],
}

/// Drops all whitespace so printed and generated pairings compare exactly.
pub fn squeeze(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

pub fn goto_listings() -> Result<Vec<GoToFixture>, ParseError> {
    let lines: Vec<&str> = GOTO_LISTINGS.lines().collect();
    let mut out = Vec::new();
    for (block, chunk) in lines.chunks(7).enumerate() {
        let at = block * 7 + 1;
        if chunk.len() != 7 {
            return Err(err("goto_listings", at, "truncated listing"));
        }
        let header = chunk[0];
        let number = header
            .strip_prefix("GoTo #")
            .and_then(|r| r.split('\t').next())
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| err("goto_listings", at, "missing GoTo number"))?;
        let otrip = parse_triples(header)
            .first()
            .copied()
            .ok_or_else(|| err("goto_listings", at, "missing O-trip"))?;
        let auto: Vec<usize> = header
            .split("Automorpheme:")
            .nth(1)
            .map(|r| {
                r.trim()
                    .trim_matches(|c| c == '(' || c == ')')
                    .split(',')
                    .filter_map(|x| x.trim().parse().ok())
                    .collect()
            })
            .unwrap_or_default();
        let automorpheme = <[usize; 7]>::try_from(auto)
            .map_err(|_| err("goto_listings", at, "automorpheme needs 7 units"))?;
        let mut columns: [[String; 3]; 4] = Default::default();
        for (r, line) in chunk[1..].iter().enumerate() {
            let cells: Vec<&str> = line
                .split('\t')
                .skip(1)
                .filter(|c| !c.trim().is_empty())
                .collect();
            let slots: Vec<usize> = if r < 3 { vec![0, 1, 2] } else { vec![3] };
            if cells.len() != slots.len() {
                return Err(err("goto_listings", at + r + 1, "unexpected cell count"));
            }
            for (slot, cell) in slots.into_iter().zip(cells) {
                columns[slot][r % 3] = squeeze(cell);
            }
        }
        out.push(GoToFixture {
            number,
            otrip,
            automorpheme,
            columns,
        });
    }
    if out.len() != 7 {
        return Err(err("goto_listings", lines.len(), "expected 7 listings"));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OsirisFixtureEntry {
    pub goto: usize,
    pub partners: [(usize, usize); 2],
}

/// Cells keyed by `(o, S)`, each with its two GoTo appearances as printed.
pub type OsirisFixture = BTreeMap<(usize, usize), Vec<OsirisFixtureEntry>>;

fn parse_osiris_cell(cell: &str) -> Option<Vec<OsirisFixtureEntry>> {
    let mut tokens = Vec::new();
    let mut rest = cell.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('(') {
            let close = r.find(')')?;
            let (a, b) = r[..close].split_once(',')?;
            tokens.push((None, Some((a.trim().parse().ok()?, b.trim().parse().ok()?))));
            rest = r[close + 1..].trim_start();
        } else {
            let end = rest
                .find(|c: char| c.is_whitespace() || c == '(')
                .unwrap_or(rest.len());
            tokens.push((Some(rest[..end].parse().ok()?), None));
            rest = rest[end..].trim_start();
        }
    }
    tokens
        .chunks(3)
        .map(|t| match t {
            [(Some(g), None), (None, Some(p)), (None, Some(q))] => Some(OsirisFixtureEntry {
                goto: *g,
                partners: [*p, *q],
            }),
            _ => None,
        })
        .collect()
}

pub fn osiris() -> Result<OsirisFixture, ParseError> {
    let mut out = BTreeMap::new();
    for (n, line) in OSIRIS.lines().enumerate().skip(1) {
        let mut fields = line.split('\t');
        let o: usize = fields
            .next()
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| err("osiris", n + 1, "missing row index"))?;
        for (i, cell) in fields.enumerate() {
            let s = 9 + i;
            if cell.trim().is_empty() {
                continue;
            }
            let entries = parse_osiris_cell(cell)
                .ok_or_else(|| err("osiris", n + 1, format!("bad cell S = {s}")))?;
            out.insert((o, s), entries);
        }
    }
    if out.len() != 42 {
        return Err(err(
            "osiris",
            1,
            format!("expected 42 cells, found {}", out.len()),
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OsirisExceptionKind {
    /// Right partners, printed in the other order.
    PartnerOrder,
    /// Content does not match any trio; ignored entirely.
    Garbled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OsirisException {
    pub cell: (usize, usize),
    pub kind: OsirisExceptionKind,
    pub note: String,
}

pub fn osiris_exceptions() -> Result<Vec<OsirisException>, ParseError> {
    let mut out = Vec::new();
    for (n, line) in OSIRIS_EXCEPTIONS.lines().enumerate().skip(1) {
        let f: Vec<&str> = line.split('\t').collect();
        let bad = || err("osiris_exceptions", n + 1, "malformed row");
        let o = f.first().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        let s = f.get(1).and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        let kind = match f.get(2).copied() {
            Some("partner-order") => OsirisExceptionKind::PartnerOrder,
            Some("garbled") => OsirisExceptionKind::Garbled,
            _ => return Err(bad()),
        };
        out.push(OsirisException {
            cell: (o, s),
            kind,
            note: f.get(3).unwrap_or(&"").to_string(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrutRow {
    pub signature: u8,
    pub gotos: [usize; 4],
    /// A through F.
    pub vertices: [(usize, usize); 6],
}

pub fn strut_table() -> Result<Vec<StrutRow>, ParseError> {
    let mut out = Vec::new();
    for (n, line) in STRUT_TABLE.lines().enumerate().skip(1) {
        let f: Vec<&str> = line.split('\t').collect();
        let bad = || err("strut_table", n + 1, "malformed row");
        if f.len() != 8 {
            return Err(bad());
        }
        let signature = sedenion_core::boxkite::parse_kite(f[0]).map_err(|_| bad())?;
        let gotos: Vec<usize> = f[1]
            .split(',')
            .filter_map(|x| x.trim().parse().ok())
            .collect();
        let gotos = <[usize; 4]>::try_from(gotos).map_err(|_| bad())?;
        let mut vertices = [(0, 0); 6];
        for (v, cell) in vertices.iter_mut().zip(&f[2..]) {
            let (o, s) = cell.split_once(',').ok_or_else(bad)?;
            *v = (
                o.trim().parse().map_err(|_| bad())?,
                s.trim().parse().map_err(|_| bad())?,
            );
        }
        out.push(StrutRow {
            signature,
            gotos,
            vertices,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse() {
        assert_eq!(sedenion_table().unwrap()[1][2], (Sign::Plus, 3));
        assert_eq!(table_exceptions().unwrap().len(), 1);
        let (o, s) = trips().unwrap();
        assert_eq!(o[2], [1, 7, 6]);
        assert_eq!(s[0], [1, 8, 9]);
        let g = goto_listings().unwrap();
        assert_eq!(g[0].columns[3][2], "(3+13)(1+15)");
        assert_eq!(g[6].automorpheme, [3, 6, 5, 9, 10, 12, 15]);
        let os = osiris().unwrap();
        assert_eq!(os[&(1, 13)][0].partners, [(2, 14), (3, 15)]);
        assert_eq!(osiris_exceptions().unwrap().len(), 2);
        let st = strut_table().unwrap();
        assert_eq!(st[2].gotos, [5, 4, 2, 3]);
        assert_eq!(st[6].vertices[5], (6, 9));
    }

    #[test]
    fn cells() {
        assert_eq!(parse_cell("-U"), Some((Sign::Minus, 0)));
        assert_eq!(parse_cell("14"), Some((Sign::Plus, 14)));
        assert_eq!(parse_cell("x"), None);
    }
}

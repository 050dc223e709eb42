//! Box-kites: the seven octahedral clusters of six assessors, and the
//! machinery built on them (Osiris Partition, lanyards, strut-plane cycles,
//! recombinant navigation, Seinfeld composites and donut maps).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::cdalgebra::{Element, Sign, Triple};
use crate::error::{Error, Result};
use crate::zerodiv::{
    Assessor, Diagonal, GoToListing, Orientation, Pairing, Sedenions, Trio, TrioKind, EIGHT_BALL,
};

const ROMAN: [&str; 7] = ["I", "II", "III", "IV", "V", "VI", "VII"];

/// Roman numeral for a strut signature in 1..=7.
pub fn roman(signature: u8) -> Result<&'static str> {
    match signature {
        1..=7 => Ok(ROMAN[signature as usize - 1]),
        _ => Err(Error::InvalidKite(signature)),
    }
}

/// Accepts "III", "iii" or "3".
pub fn parse_kite(s: &str) -> Result<u8> {
    let t = s.trim();
    if let Ok(n) = t.parse::<u8>() {
        return if (1..=7).contains(&n) {
            Ok(n)
        } else {
            Err(Error::InvalidKite(n))
        };
    }
    ROMAN
        .iter()
        .position(|r| r.eq_ignore_ascii_case(t))
        .map(|p| p as u8 + 1)
        .ok_or(Error::InvalidArgument("kite must be I..VII or 1..7"))
}

/// Vertex slots of a box-kite. Struts join A-F, B-E and C-D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Label {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Label {
    pub const ALL: [Label; 6] = [Label::A, Label::B, Label::C, Label::D, Label::E, Label::F];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The other end of this label's strut.
    pub fn opposite(self) -> Label {
        Label::ALL[5 - self.index()]
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = ['A', 'B', 'C', 'D', 'E', 'F'][self.index()];
        write!(f, "{c}")
    }
}

/// Faces of the octahedron in the order sails ABC, AED, FBD, FEC.
pub const SAILS: [[Label; 3]; 4] = [
    [Label::A, Label::B, Label::C],
    [Label::A, Label::E, Label::D],
    [Label::F, Label::B, Label::D],
    [Label::F, Label::E, Label::C],
];

pub const VENTS: [[Label; 3]; 4] = [
    [Label::F, Label::E, Label::D],
    [Label::A, Label::B, Label::D],
    [Label::A, Label::E, Label::C],
    [Label::F, Label::B, Label::C],
];

pub const STRUTS: [(Label, Label); 3] = [
    (Label::A, Label::F),
    (Label::B, Label::E),
    (Label::C, Label::D),
];

/// A face that is not closed under Production Rule #1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vent {
    pub labels: [Label; 3],
    pub members: [Assessor; 3],
    /// Signs of the edges 0-1, 1-2, 2-0.
    pub edge_signs: [Sign; 3],
    pub kind: TrioKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoxKite {
    pub signature: u8,
    /// Indexed by [`Label::index`].
    pub vertices: [Assessor; 6],
    /// Same order as [`SAILS`].
    pub sails: [Trio; 4],
    /// Same order as [`VENTS`].
    pub vents: [Vent; 4],
    /// GoTo numbers of the sails' O-trips, in [`SAILS`] order.
    pub goto_ids: [usize; 4],
}

impl BoxKite {
    pub fn vertex(&self, l: Label) -> Assessor {
        self.vertices[l.index()]
    }

    pub fn label_of(&self, a: Assessor) -> Option<Label> {
        self.vertices
            .iter()
            .position(|v| *v == a)
            .map(|i| Label::ALL[i])
    }

    pub fn contains(&self, a: Assessor) -> bool {
        self.vertices.contains(&a)
    }

    pub fn struts(&self) -> [(Assessor, Assessor); 3] {
        STRUTS.map(|(x, y)| (self.vertex(x), self.vertex(y)))
    }

    pub fn strut_partner(&self, a: Assessor) -> Option<Assessor> {
        self.label_of(a).map(|l| self.vertex(l.opposite()))
    }

    /// The 12 non-strut vertex pairs.
    pub fn edges(&self) -> Vec<(Label, Label)> {
        let mut out = Vec::with_capacity(12);
        for (i, &x) in Label::ALL.iter().enumerate() {
            for &y in &Label::ALL[i + 1..] {
                if y != x.opposite() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All 12 diagonals, `A+, A-, B+, ...`.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        self.vertices
            .iter()
            .flat_map(|a| [a.up(), a.down()])
            .collect()
    }

    pub fn name(&self) -> &'static str {
        roman(self.signature).unwrap_or("?")
    }
}

fn face_signs(sed: &Sedenions, m: [Assessor; 3]) -> Result<[Sign; 3]> {
    Ok([
        sed.edge_sign(m[0], m[1])?,
        sed.edge_sign(m[1], m[2])?,
        sed.edge_sign(m[2], m[0])?,
    ])
}

fn kind_of(signs: &[Sign; 3]) -> Result<TrioKind> {
    match signs.iter().filter(|s| **s == Sign::Minus).count() {
        3 => Ok(TrioKind::Zigzag),
        1 => Ok(TrioKind::Trefoil),
        _ => Err(Error::InvalidArgument(
            "face sign pattern is neither zigzag nor trefoil",
        )),
    }
}

/// Assembles the kite with the given strut signature.
pub fn box_kite(sed: &Sedenions, signature: u8) -> Result<BoxKite> {
    if !(1..=7).contains(&signature) {
        return Err(Error::InvalidKite(signature));
    }
    let s = signature as usize;
    let members: BTreeSet<Assessor> = Assessor::all()
        .into_iter()
        .filter(|a| a.kite() == signature)
        .collect();
    let zigzag = sed
        .enumerate_trios()
        .into_iter()
        .find(|t| t.kind == TrioKind::Zigzag && t.members.iter().all(|m| members.contains(m)))
        .ok_or(Error::InvalidKite(signature))?;
    let [a, b, c] = zigzag.members;
    let partner = |x: Assessor| Assessor::new(x.o() ^ s, x.s() ^ s);
    let vertices = [a, b, c, partner(c)?, partner(b)?, partner(a)?];

    let otrips = sed.otrips();
    let mut sails = Vec::with_capacity(4);
    let mut goto_ids = [0; 4];
    for (k, face) in SAILS.iter().enumerate() {
        let trio = sed.trio_of(face.map(|l| vertices[l.index()]))?;
        goto_ids[k] = otrips
            .iter()
            .position(|t| *t == trio.otrip)
            .ok_or(Error::NotAnOTrip(trio.otrip.as_array()))?
            + 1;
        sails.push(trio);
    }
    let mut vents = Vec::with_capacity(4);
    for face in VENTS {
        let m = face.map(|l| vertices[l.index()]);
        let edge_signs = face_signs(sed, m)?;
        vents.push(Vent {
            labels: face,
            members: m,
            edge_signs,
            kind: kind_of(&edge_signs)?,
        });
    }
    Ok(BoxKite {
        signature,
        vertices,
        sails: <[Trio; 4]>::try_from(sails).map_err(|_| Error::InvalidKite(signature))?,
        vents: <[Vent; 4]>::try_from(vents).map_err(|_| Error::InvalidKite(signature))?,
        goto_ids,
    })
}

/// The seven kites, I through VII.
pub fn assemble_box_kites(sed: &Sedenions) -> Vec<BoxKite> {
    (1..=7)
        .map(|s| box_kite(sed, s).expect("every signature yields a kite"))
        .collect()
}

/// Product of two strut-opposite diagonals; always a single term.
pub fn strut_product(
    sed: &Sedenions,
    p: Assessor,
    q: Assessor,
    sg_p: Sign,
    sg_q: Sign,
) -> Result<Element> {
    if p.kite() != q.kite()
        || p.o() ^ q.o() != p.kite() as usize
        || p.s() ^ q.s() != p.kite() as usize
    {
        return Err(Error::NotAStrut(p, q));
    }
    Ok(sed.product(
        p.diagonal(Orientation::from_sign(sg_p)),
        q.diagonal(Orientation::from_sign(sg_q)),
    ))
}

/// The index on which same-signed strut products land.
pub fn strut_signature(sed: &Sedenions, k: &BoxKite) -> Result<usize> {
    let mut found = None;
    for (x, y) in k.struts() {
        for (sx, sy) in [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus)] {
            let p = strut_product(sed, x, y, sx, sy)?;
            let (idx, _) = p.single_term().ok_or(Error::NotAStrut(x, y))?;
            match found {
                None => found = Some(idx),
                Some(f) if f == idx => {}
                Some(_) => return Err(Error::NotAStrut(x, y)),
            }
        }
        for (sx, sy) in [(Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)] {
            let p = strut_product(sed, x, y, sx, sy)?;
            if p.single_term().map(|t| t.0) != Some(EIGHT_BALL) {
                return Err(Error::NotAStrut(x, y));
            }
        }
    }
    found.ok_or(Error::InvalidKite(k.signature))
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TriangleCensus {
    pub sail_zigzags: usize,
    pub sail_trefoils: usize,
    pub vent_zigzags: usize,
    pub vent_trefoils: usize,
    /// Each sail's three edges complete (under Rule #1) to the sail itself.
    pub sails_closed: bool,
    /// No vent edge completes to its vent.
    pub vents_open: bool,
    /// Each vent's three edges complete to three different sails.
    pub vent_edges_in_distinct_sails: bool,
    /// Every face has edge-sign product `-1`.
    pub faces_odd: bool,
}

pub fn classify_triangles(sed: &Sedenions, k: &BoxKite) -> Result<TriangleCensus> {
    let count =
        |kinds: &mut dyn Iterator<Item = TrioKind>, want| kinds.filter(|x| *x == want).count();
    let mut sails_closed = true;
    for sail in &k.sails {
        for i in 0..3 {
            let t = sed.rule1_complete(sail.members[i], sail.members[(i + 1) % 3])?;
            sails_closed &= t.member_set() == sail.member_set();
        }
    }
    let mut vents_open = true;
    let mut distinct = true;
    for vent in &k.vents {
        let mut seen = BTreeSet::new();
        for i in 0..3 {
            let t = sed.rule1_complete(vent.members[i], vent.members[(i + 1) % 3])?;
            let set = t.member_set();
            vents_open &= set != vent.members.iter().copied().collect::<BTreeSet<_>>();
            distinct &= k.sails.iter().any(|s| s.member_set() == set);
            seen.insert(t.members);
        }
        distinct &= seen.len() == 3;
    }
    let odd = |s: &[Sign; 3]| s[0] * s[1] * s[2] == Sign::Minus;
    Ok(TriangleCensus {
        sail_zigzags: count(&mut k.sails.iter().map(|t| t.kind), TrioKind::Zigzag),
        sail_trefoils: count(&mut k.sails.iter().map(|t| t.kind), TrioKind::Trefoil),
        vent_zigzags: count(&mut k.vents.iter().map(|t| t.kind), TrioKind::Zigzag),
        vent_trefoils: count(&mut k.vents.iter().map(|t| t.kind), TrioKind::Trefoil),
        sails_closed,
        vents_open,
        vent_edges_in_distinct_sails: distinct,
        faces_odd: k.sails.iter().all(|t| odd(&t.edge_signs))
            && k.vents.iter().all(|v| odd(&v.edge_signs)),
    })
}

// ---------------------------------------------------------------- Osiris

/// One GoTo appearance of an assessor: the listing number and the two
/// co-assessors it forms a trio with there, by ascending o.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OsirisEntry {
    pub goto: usize,
    pub partners: [Assessor; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OsirisCell {
    pub assessor: Assessor,
    pub kite: u8,
    pub entries: [OsirisEntry; 2],
}

/// Rows are o = 1..=7, columns S = 9..=15.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OsirisPartition {
    pub cells: Vec<Vec<Option<OsirisCell>>>,
}

impl OsirisPartition {
    pub fn cell(&self, o: usize, s: usize) -> Option<&OsirisCell> {
        if !(1..=7).contains(&o) || !(9..=15).contains(&s) {
            return None;
        }
        self.cells[o - 1][s - 9].as_ref()
    }

    /// The kite signature of each cell.
    pub fn stripped(&self) -> Vec<Vec<Option<u8>>> {
        self.cells
            .iter()
            .map(|row| row.iter().map(|c| c.map(|c| c.kite)).collect())
            .collect()
    }
}

pub fn osiris_partition(sed: &Sedenions) -> OsirisPartition {
    let listings = sed.goto_listings();
    let mut cells = Vec::with_capacity(7);
    for o in 1..=7 {
        let mut row = Vec::with_capacity(7);
        for s in 9..=15 {
            let cell = Assessor::new(o, s).ok().map(|a| {
                let mut entries = Vec::with_capacity(2);
                for l in &listings {
                    for col in &l.columns {
                        if col.trio.contains(a) {
                            let mut others: Vec<Assessor> = col
                                .trio
                                .members
                                .iter()
                                .copied()
                                .filter(|m| *m != a)
                                .collect();
                            others.sort();
                            entries.push(OsirisEntry {
                                goto: l.number,
                                partners: [others[0], others[1]],
                            });
                        }
                    }
                }
                OsirisCell {
                    assessor: a,
                    kite: a.kite(),
                    entries: [entries[0], entries[1]],
                }
            });
            row.push(cell);
        }
        cells.push(row);
    }
    OsirisPartition { cells }
}

// ---------------------------------------------------------------- lanyards

/// A closed chain of diagonals, consecutive beads (and last with first)
/// having zero product.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Lanyard {
    pub beads: Vec<Diagonal>,
    /// Both diagonals of every visited assessor are threaded.
    pub complete: bool,
}

impl Lanyard {
    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn assessors(&self) -> BTreeSet<Assessor> {
        self.beads.iter().map(|b| b.assessor).collect()
    }

    /// Sign of each link: `+` when both beads share an orientation.
    pub fn link_signs(&self) -> Vec<Sign> {
        let n = self.beads.len();
        (0..n)
            .map(|i| {
                let (x, y) = (self.beads[i], self.beads[(i + 1) % n]);
                if x.orientation == y.orientation {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect()
    }

    pub fn orientation_pattern(&self) -> Vec<Orientation> {
        self.beads.iter().map(|b| b.orientation).collect()
    }
}

struct DiagonalGraph {
    nodes: Vec<Diagonal>,
    adj: Vec<Vec<usize>>,
}

impl DiagonalGraph {
    fn new(sed: &Sedenions, k: &BoxKite) -> Self {
        let nodes = k.diagonals();
        let adj = nodes
            .iter()
            .map(|&x| {
                (0..nodes.len())
                    .filter(|&j| sed.is_zero_coupling(x, nodes[j]))
                    .collect()
            })
            .collect();
        DiagonalGraph { nodes, adj }
    }

    fn linked(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    /// Simple cycles up to rotation and reflection.
    fn cycles(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in 0..self.nodes.len() {
            let mut path = alloc::vec![start];
            let mut seen = alloc::vec![false; self.nodes.len()];
            seen[start] = true;
            self.cycle_dfs(start, &mut path, &mut seen, max_len, &mut out);
        }
        out
    }

    fn cycle_dfs(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        seen: &mut [bool],
        max_len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("path is never empty");
        for &nb in &self.adj[last] {
            if nb == start && path.len() >= 3 {
                if path[1] < path[path.len() - 1] {
                    out.push(path.clone());
                }
            } else if !seen[nb] && nb > start && path.len() < max_len {
                seen[nb] = true;
                path.push(nb);
                self.cycle_dfs(start, path, seen, max_len, out);
                path.pop();
                seen[nb] = false;
            }
        }
    }

    /// Simple open paths up to reversal, visited in full.
    fn paths(&self, max_len: usize, visit: &mut dyn FnMut(&[usize])) {
        fn go(
            g: &DiagonalGraph,
            path: &mut Vec<usize>,
            seen: &mut [bool],
            max_len: usize,
            visit: &mut dyn FnMut(&[usize]),
        ) {
            if path.len() >= 2 && path[0] < path[path.len() - 1] {
                visit(path);
            }
            if path.len() == max_len {
                return;
            }
            let last = path[path.len() - 1];
            for &nb in &g.adj[last] {
                if !seen[nb] {
                    seen[nb] = true;
                    path.push(nb);
                    go(g, path, seen, max_len, visit);
                    path.pop();
                    seen[nb] = false;
                }
            }
        }
        for start in 0..self.nodes.len() {
            let mut seen = alloc::vec![false; self.nodes.len()];
            seen[start] = true;
            go(self, &mut alloc::vec![start], &mut seen, max_len, visit);
        }
    }
}

fn completeness(beads: &[Diagonal]) -> (usize, usize) {
    let mut per: BTreeMap<Assessor, usize> = BTreeMap::new();
    for b in beads {
        *per.entry(b.assessor).or_default() += 1;
    }
    let singles = per.values().filter(|v| **v == 1).count();
    (per.len(), singles)
}

/// All simple closed lanyards of length at most `max_len`.
pub fn lanyards(sed: &Sedenions, k: &BoxKite, max_len: usize) -> Vec<Lanyard> {
    let g = DiagonalGraph::new(sed, k);
    g.cycles(max_len)
        .into_iter()
        .map(|c| {
            let beads: Vec<Diagonal> = c.iter().map(|&i| g.nodes[i]).collect();
            let (_, singles) = completeness(&beads);
            Lanyard {
                complete: singles == 0,
                beads,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LengthCount {
    pub cycles: usize,
    pub complete: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LanyardCensus {
    pub max_len: usize,
    /// Simple closed lanyards by bead count.
    pub by_length: BTreeMap<usize, LengthCount>,
    /// 4-cycles around the square spanned by two struts.
    pub tray_racks: usize,
    /// 4-cycles through a strut's two ends and one edge of the opposite square.
    pub butterflies: usize,
    /// 6-cycles visiting all six assessors once.
    pub perimeters: usize,
    /// Perimeters with the UUDUUD / DDUDDU rhythm.
    pub waltz_bands: usize,
    /// Cycles using only `+` links.
    pub cats_cradles: usize,
    /// Open 12-bead strands threading the zigzag sail, then one `+` link,
    /// then the zigzag vent, with unlinked ends.
    pub double_zigzags: usize,
    /// Open strands missing exactly one bead among the assessors they visit,
    /// with unlinked ends, by bead count.
    pub missing_links: BTreeMap<usize, usize>,
    /// Every face has edge-sign product `-1`.
    pub faces_odd: bool,
    /// Every tray-rack square has edge-sign product `+1`.
    pub squares_even: bool,
}

impl LanyardCensus {
    pub fn complete(&self, len: usize) -> usize {
        self.by_length.get(&len).map_or(0, |c| c.complete)
    }
}

fn canonical_rhythm(p: &[Orientation]) -> Vec<Orientation> {
    let n = p.len();
    let mut best: Option<Vec<Orientation>> = None;
    let rev: Vec<Orientation> = p.iter().rev().copied().collect();
    for seq in [p.to_vec(), rev] {
        for r in 0..n {
            let cand: Vec<Orientation> = (0..n).map(|i| seq[(i + r) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn lanyard_census(sed: &Sedenions, k: &BoxKite, max_len: usize) -> Result<LanyardCensus> {
    if max_len < 3 {
        return Err(Error::InvalidArgument("lanyards need at least three beads"));
    }
    let max_len = max_len.min(12);
    let g = DiagonalGraph::new(sed, k);
    let cycles = g.cycles(max_len);
    let mut by_length: BTreeMap<usize, LengthCount> = BTreeMap::new();
    let (mut tray_racks, mut butterflies, mut perimeters, mut waltz_bands, mut cats_cradles) =
        (0, 0, 0, 0, 0);
    let waltz = {
        use Orientation::{D, U};
        canonical_rhythm(&[U, U, D, U, U, D])
    };
    for c in &cycles {
        let beads: Vec<Diagonal> = c.iter().map(|&i| g.nodes[i]).collect();
        let (visited, singles) = completeness(&beads);
        let entry = by_length.entry(beads.len()).or_default();
        entry.cycles += 1;
        if singles == 0 {
            entry.complete += 1;
        }
        let lan = Lanyard {
            complete: singles == 0,
            beads,
        };
        let assessors = lan.assessors();
        if lan.len() == 4 && visited == 4 {
            let two_struts = assessors
                .iter()
                .all(|a| k.strut_partner(*a).is_some_and(|p| assessors.contains(&p)));
            if two_struts {
                tray_racks += 1;
            } else {
                butterflies += 1;
            }
        }
        if lan.len() == 6 && visited == 6 {
            perimeters += 1;
            if canonical_rhythm(&lan.orientation_pattern()) == waltz {
                waltz_bands += 1;
            }
        }
        if lan.link_signs().iter().all(|s| *s == Sign::Plus) {
            cats_cradles += 1;
        }
    }

    // open strands
    let zig_sail: BTreeSet<Assessor> = k
        .sails
        .iter()
        .find(|t| t.kind == TrioKind::Zigzag)
        .map(|t| t.member_set())
        .unwrap_or_default();
    let zig_vent: BTreeSet<Assessor> = k
        .vents
        .iter()
        .find(|v| v.kind == TrioKind::Zigzag)
        .map(|v| v.members.iter().copied().collect())
        .unwrap_or_default();
    let mut double_zigzags = 0;
    let mut missing_links: BTreeMap<usize, usize> = BTreeMap::new();
    g.paths(max_len, &mut |p| {
        let (first, last) = (p[0], p[p.len() - 1]);
        if g.linked(first, last) {
            return;
        }
        let beads: Vec<Diagonal> = p.iter().map(|&i| g.nodes[i]).collect();
        let (_, singles) = completeness(&beads);
        if singles == 1 {
            *missing_links.entry(p.len()).or_default() += 1;
        }
        if p.len() == 12 {
            let halves = |range: core::ops::Range<usize>, set: &BTreeSet<Assessor>| {
                range.clone().all(|i| set.contains(&beads[i].assessor))
            };
            let join_plus = beads[5].orientation == beads[6].orientation;
            let forward = halves(0..6, &zig_sail) && halves(6..12, &zig_vent);
            let backward = halves(0..6, &zig_vent) && halves(6..12, &zig_sail);
            if join_plus && (forward || backward) {
                double_zigzags += 1;
            }
        }
    });

    let census = classify_triangles(sed, k)?;
    let mut squares_even = true;
    for (s1, s2) in [(0, 1), (0, 2), (1, 2)] {
        let (a, f) = STRUTS[s1];
        let (b, e) = STRUTS[s2];
        let ring = [a, b, f, e];
        let mut prod = Sign::Plus;
        for i in 0..4 {
            prod = prod * sed.edge_sign(k.vertex(ring[i]), k.vertex(ring[(i + 1) % 4]))?;
        }
        squares_even &= prod == Sign::Plus;
    }
    Ok(LanyardCensus {
        max_len,
        by_length,
        tray_racks,
        butterflies,
        perimeters,
        waltz_bands,
        cats_cradles,
        double_zigzags,
        missing_links,
        faces_odd: census.faces_odd,
        squares_even,
    })
}

// ---------------------------------------------------------------- strut planes

/// A strut's two assessors added with opposite orientations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StrutSum {
    pub first: Diagonal,
    pub second: Diagonal,
}

impl StrutSum {
    pub fn terms(&self) -> [Diagonal; 2] {
        [self.first, self.second]
    }

    pub fn element(&self) -> Element {
        &self.first.element() + &self.second.element()
    }
}

impl fmt::Display for StrutSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.first, self.second)
    }
}

/// True when every basis diagonal on the left zero-divides every one on the right.
fn spans_annihilate(sed: &Sedenions, left: &[Diagonal], right: &[Diagonal]) -> bool {
    left.iter().all(|&x| {
        right
            .iter()
            .all(|&y| x.assessor != y.assessor && sed.product(x, y).is_zero())
    })
}

/// The strut's o's in the cyclic order of their O-trip starting at the signature.
fn strut_order(
    sed: &Sedenions,
    k: &BoxKite,
    x: Assessor,
    y: Assessor,
) -> Result<(Assessor, Assessor)> {
    let s = k.signature as usize;
    let t: Triple = sed.otrip_of([s, x.o(), y.o()])?;
    let r = t.rotated_to(s).ok_or(Error::NotAnOTrip(t.as_array()))?;
    if r[1] == x.o() {
        Ok((x, y))
    } else {
        Ok((y, x))
    }
}

/// The triple-product 6-cycle of strut planes: each term annihilates both
/// dyads of its successor.
pub fn strut_plane_cycle(sed: &Sedenions, k: &BoxKite) -> Result<[StrutSum; 6]> {
    let mut struts = Vec::with_capacity(3);
    for (x, y) in k.struts() {
        struts.push(strut_order(sed, k, x, y)?);
    }
    struts.sort_by_key(|(x, _)| x.o());
    let sum = |(x, y): (Assessor, Assessor), o: Orientation| StrutSum {
        first: x.diagonal(o),
        second: y.diagonal(o.flipped()),
    };
    let mut out = Vec::with_capacity(6);
    let mut cur = sum(struts[0], Orientation::U);
    out.push(cur);
    for step in 1..6 {
        let next_strut = struts[step % 3];
        let next = [Orientation::U, Orientation::D]
            .into_iter()
            .map(|o| sum(next_strut, o))
            .find(|n| spans_annihilate(sed, &cur.terms(), &n.terms()))
            .ok_or(Error::InvalidKite(k.signature))?;
        out.push(next);
        cur = next;
    }
    if !spans_annihilate(sed, &cur.terms(), &out[0].terms()) {
        return Err(Error::InvalidKite(k.signature));
    }
    <[StrutSum; 6]>::try_from(out).map_err(|_| Error::InvalidKite(k.signature))
}

// ---------------------------------------------------------------- recombinant DNA

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DnaTwist {
    pub products: [StrutSum; 2],
    pub target: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DnaResult {
    pub top: StrutSum,
    pub bottom: StrutSum,
    /// Symmetric flip, recombined crosswise.
    pub column: DnaTwist,
    /// Asymmetric flip, recombined vertically.
    pub diagonal: DnaTwist,
}

fn dyad(o: Assessor, from: Diagonal, flip: bool) -> Result<Diagonal> {
    let sign = if flip {
        -from.orientation.sign()
    } else {
        from.orientation.sign()
    };
    Ok(Assessor::new(o.o(), from.assessor.s())?.diagonal(Orientation::from_sign(sign)))
}

fn verify_strut_sum(sed: &Sedenions, sum: &StrutSum, target: u8) -> Result<()> {
    let (x, y) = (sum.first.assessor, sum.second.assessor);
    let k = box_kite(sed, target)?;
    if k.strut_partner(x) != Some(y) || sum.first.orientation == sum.second.orientation {
        return Err(Error::NotAStrut(x, y));
    }
    Ok(())
}

/// Twists the strut pairing at `position` (1..=6) of the strut-plane cycle
/// with its successor, in both ways.
pub fn recombinant_dna(sed: &Sedenions, k: &BoxKite, position: usize) -> Result<DnaResult> {
    if !(1..=6).contains(&position) {
        return Err(Error::InvalidPosition(position));
    }
    let cycle = strut_plane_cycle(sed, k)?;
    let top = cycle[position - 1];
    let bottom = cycle[position % 6];
    let (tl, tr, bl, br) = (top.first, top.second, bottom.first, bottom.second);

    let c_tl = dyad(tl.assessor, bl, true)?;
    let c_bl = dyad(bl.assessor, tl, false)?;
    let c_tr = dyad(tr.assessor, br, true)?;
    let c_br = dyad(br.assessor, tr, false)?;
    let column = DnaTwist {
        products: [
            StrutSum {
                first: c_tl,
                second: c_br,
            },
            StrutSum {
                first: c_bl,
                second: c_tr,
            },
        ],
        target: (tl.assessor.o() ^ br.assessor.o()) as u8,
    };

    let d_tl = dyad(tl.assessor, br, true)?;
    let d_br = dyad(br.assessor, tl, false)?;
    let d_bl = dyad(bl.assessor, tr, true)?;
    let d_tr = dyad(tr.assessor, bl, false)?;
    let diagonal = DnaTwist {
        products: [
            StrutSum {
                first: d_tl,
                second: d_bl,
            },
            StrutSum {
                first: d_tr,
                second: d_br,
            },
        ],
        target: (tl.assessor.o() ^ bl.assessor.o()) as u8,
    };
    for twist in [&column, &diagonal] {
        for p in &twist.products {
            verify_strut_sum(sed, p, twist.target)?;
        }
    }
    Ok(DnaResult {
        top,
        bottom,
        column,
        diagonal,
    })
}

// ---------------------------------------------------------------- Seinfeld

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeinfeldCensus {
    /// Cases 1..=9 at indices 0..=8.
    pub cases: [usize; 9],
    /// Case 3 counted over mismatched planes on every edge, not only minus edges.
    pub case3_all_edges: usize,
    /// 4-spaces annihilated by a strut plane.
    pub hyperplanes: usize,
    pub samples_per_configuration: usize,
    pub samples_checked: usize,
    /// Every sampled scalar assignment gave an exactly zero product.
    pub samples_zero: bool,
}

struct Sampler<'a, R: Rng + ?Sized> {
    sed: &'a Sedenions,
    rng: &'a mut R,
    samples: usize,
    checked: usize,
    ok: bool,
}

impl<R: Rng + ?Sized> Sampler<'_, R> {
    fn scalar(&mut self) -> i64 {
        let m = self.rng.gen_range(1..=9i64);
        if self.rng.gen_bool(0.5) {
            m
        } else {
            -m
        }
    }

    fn combo(&mut self, basis: &[Diagonal]) -> Element {
        let mut e = Element::zero(16);
        for d in basis {
            e = &e + &d.element().scale(self.scalar());
        }
        e
    }

    /// Counts a configuration after confirming it on the basis and on samples.
    fn confirm(&mut self, left: &[Diagonal], right: &[Diagonal]) -> bool {
        if !spans_annihilate(self.sed, left, right) {
            return false;
        }
        for _ in 0..self.samples {
            let x = self.combo(left);
            let y = self.combo(right);
            let p = self
                .sed
                .algebra()
                .mul_element(&x, &y)
                .expect("same algebra");
            self.ok &= p.is_zero();
            self.checked += 1;
        }
        true
    }
}

fn subsets3(items: &[Diagonal]) -> Vec<[Diagonal; 3]> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            for k in j + 1..items.len() {
                out.push([items[i], items[j], items[k]]);
            }
        }
    }
    out
}

pub fn seinfeld_census<R: Rng + ?Sized>(
    sed: &Sedenions,
    k: &BoxKite,
    samples: usize,
    rng: &mut R,
) -> Result<SeinfeldCensus> {
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample per configuration",
        ));
    }
    let mut sm = Sampler {
        sed,
        rng,
        samples,
        checked: 0,
        ok: true,
    };
    let diags = k.diagonals();
    // strut planes, indexed by (strut, orientation of its first end)
    let mut sps: Vec<(usize, [Diagonal; 2])> = Vec::with_capacity(6);
    for (i, (x, y)) in k.struts().into_iter().enumerate() {
        for o in [Orientation::U, Orientation::D] {
            sps.push((i, [x.diagonal(o), y.diagonal(o.flipped())]));
        }
    }
    let mut mismatched: Vec<([Diagonal; 2], Sign)> = Vec::new();
    for (x, y) in k.edges() {
        let (x, y) = (k.vertex(x), k.vertex(y));
        let sign = sed.edge_sign(x, y)?;
        for dx in [x.up(), x.down()] {
            for dy in [y.up(), y.down()] {
                if !sed.is_zero_coupling(dx, dy) {
                    mismatched.push(([dx, dy], sign));
                }
            }
        }
    }

    let mut cases = [0usize; 9];
    let mut case3_all_edges = 0;
    for (_, sp) in &sps {
        for d in &diags {
            if sm.confirm(sp, &[*d]) {
                cases[0] += 1;
            }
        }
    }
    for (plane, _) in &mismatched {
        for d in &diags {
            if sm.confirm(plane, &[*d]) {
                cases[1] += 1;
            }
        }
    }
    for (_, sp) in &sps {
        for (plane, sign) in &mismatched {
            if sm.confirm(sp, plane) {
                case3_all_edges += 1;
                if *sign == Sign::Minus {
                    cases[2] += 1;
                }
            }
        }
    }
    let mut sp_adj = alloc::vec![Vec::new(); sps.len()];
    for i in 0..sps.len() {
        for j in i + 1..sps.len() {
            if sm.confirm(&sps[i].1, &sps[j].1) {
                cases[3] += 1;
                sp_adj[i].push(j);
                sp_adj[j].push(i);
            }
        }
    }
    cases[4] = six_cycles(&sp_adj);
    for d in &diags {
        let partners: Vec<Diagonal> = diags
            .iter()
            .copied()
            .filter(|e| sed.is_zero_coupling(*d, *e))
            .collect();
        for triad in subsets3(&partners) {
            if sm.confirm(&[*d], &triad) {
                cases[5] += 1;
            }
        }
    }
    for (_, sp) in &sps {
        let partners: Vec<Diagonal> = diags
            .iter()
            .copied()
            .filter(|e| spans_annihilate(sed, sp, &[*e]))
            .collect();
        for triad in subsets3(&partners) {
            if sm.confirm(sp, &triad) {
                cases[6] += 1;
            }
        }
    }
    let mut four_spaces: Vec<(usize, usize, [Diagonal; 4])> = Vec::new();
    for i in 0..sps.len() {
        for j in i + 1..sps.len() {
            if sps[i].0 != sps[j].0 {
                let (a, b) = (sps[i].1, sps[j].1);
                four_spaces.push((sps[i].0, sps[j].0, [a[0], a[1], b[0], b[1]]));
            }
        }
    }
    for (_, _, space) in &four_spaces {
        for d in &diags {
            if sm.confirm(&[*d], space) {
                cases[7] += 1;
            }
        }
    }
    let mut hyper: BTreeSet<[Diagonal; 4]> = BTreeSet::new();
    for (strut, sp) in &sps {
        for (s1, s2, space) in &four_spaces {
            if s1 != strut && s2 != strut && sm.confirm(sp, space) {
                cases[8] += 1;
                let mut key = *space;
                key.sort();
                hyper.insert(key);
            }
        }
    }
    Ok(SeinfeldCensus {
        cases,
        case3_all_edges,
        hyperplanes: hyper.len(),
        samples_per_configuration: samples,
        samples_checked: sm.checked,
        samples_zero: sm.ok,
    })
}

fn six_cycles(adj: &[Vec<usize>]) -> usize {
    fn go(
        adj: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        seen: &mut [bool],
        count: &mut usize,
    ) {
        let last = path[path.len() - 1];
        for &nb in &adj[last] {
            if nb == start && path.len() == 6 {
                if path[1] < path[5] {
                    *count += 1;
                }
            } else if !seen[nb] && nb > start && path.len() < 6 {
                seen[nb] = true;
                path.push(nb);
                go(adj, start, path, seen, count);
                path.pop();
                seen[nb] = false;
            }
        }
    }
    let mut count = 0;
    for start in 0..adj.len() {
        let mut seen = alloc::vec![false; adj.len()];
        seen[start] = true;
        go(adj, start, &mut alloc::vec![start], &mut seen, &mut count);
    }
    count
}

// ---------------------------------------------------------------- donuts

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Compass {
    North,
    East,
    South,
    West,
}

impl Compass {
    pub const ALL: [Compass; 4] = [Compass::North, Compass::East, Compass::South, Compass::West];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DonutTriangle {
    pub position: Compass,
    pub trio: Trio,
    pub kite: u8,
}

/// Where a pasted pair of edges sits on the square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Seam {
    /// Spoke from the center, shared by neighbouring triangles.
    HalfDiagonal,
    /// Opposite sides of the square, glued to make the torus.
    Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DonutPasting {
    pub seam: Seam,
    pub from: (Compass, Pairing),
    pub to: (Compass, Pairing),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DonutMap {
    pub goto: usize,
    pub otrip: Triple,
    /// North, East, South, West.
    pub triangles: [DonutTriangle; 4],
    /// Twist-related edge pairs: four half-diagonals and two glued sides.
    pub pastings: Vec<DonutPasting>,
}

impl DonutMap {
    pub fn triangle(&self, c: Compass) -> &DonutTriangle {
        &self.triangles[Compass::ALL.iter().position(|x| *x == c).unwrap_or(0)]
    }

    /// Assessors at the center (first o of the O-trip).
    pub fn center(&self) -> [Assessor; 4] {
        self.triangles.map(|t| t.trio.members[0])
    }

    pub fn north_south(&self) -> [Assessor; 4] {
        self.triangles.map(|t| t.trio.members[1])
    }

    pub fn west_east(&self) -> [Assessor; 4] {
        self.triangles.map(|t| t.trio.members[2])
    }

    /// All 24 couplings on the map's edges.
    pub fn couplings(&self) -> Vec<crate::zerodiv::Coupling> {
        self.pastings
            .iter()
            .flat_map(|p| [p.from.1, p.from.1.flipped(), p.to.1, p.to.1.flipped()])
            .map(|p| p.to_coupling())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

fn twist_partner(
    sed: &Sedenions,
    listing: &GoToListing,
    trio: &Trio,
    pair: (usize, usize),
) -> Result<usize> {
    let (x, y) = (trio.members[pair.0], trio.members[pair.1]);
    let p = sed.pairing(
        x.up(),
        sed.partner_diagonal(x.up(), y)
            .ok_or(Error::NotCoAssessors(x, y))?,
    )?;
    let (t, _) = sed.twist_pairing(p)?;
    listing
        .columns
        .iter()
        .position(|c| c.trio.contains(t.left.assessor) && c.trio.contains(t.right.assessor))
        .ok_or(Error::NotZeroCoupling)
}

pub fn donut_map(sed: &Sedenions, otrip: Triple) -> Result<DonutMap> {
    let listing = sed.goto_listing(otrip)?;
    // column indices of N, S, W, E
    let n = 0;
    let s = twist_partner(sed, &listing, &listing.columns[n].trio, (1, 2))?;
    let w = twist_partner(sed, &listing, &listing.columns[n].trio, (0, 1))?;
    let e = (0..4)
        .find(|c| ![n, s, w].contains(c))
        .ok_or(Error::NotAnOTrip(otrip.as_array()))?;
    let order = [n, e, s, w];
    let kite_of = |t: &Trio| t.members[0].kite();
    let triangles = [0, 1, 2, 3].map(|i| {
        let trio = listing.columns[order[i]].trio;
        DonutTriangle {
            position: Compass::ALL[i],
            trio,
            kite: kite_of(&trio),
        }
    });
    let compass_of = |col: usize| Compass::ALL[order.iter().position(|c| *c == col).unwrap_or(0)];

    let mut pastings = Vec::new();
    let mut seen: BTreeSet<crate::zerodiv::Coupling> = BTreeSet::new();
    for (ci, col) in listing.columns.iter().enumerate() {
        for row in &col.cycle[..3] {
            let key = row.to_coupling();
            if seen.contains(&key) {
                continue;
            }
            let (t, _) = sed.twist_pairing(*row)?;
            let dest = listing
                .columns
                .iter()
                .position(|c| c.trio.contains(t.left.assessor) && c.trio.contains(t.right.assessor))
                .ok_or(Error::NotZeroCoupling)?;
            seen.insert(key);
            seen.insert(row.flipped().to_coupling());
            seen.insert(t.to_coupling());
            seen.insert(t.flipped().to_coupling());
            let both_b_c = row.left.assessor.o() != otrip.a && row.right.assessor.o() != otrip.a;
            pastings.push(DonutPasting {
                seam: if both_b_c {
                    Seam::Side
                } else {
                    Seam::HalfDiagonal
                },
                from: (compass_of(ci), *row),
                to: (compass_of(dest), t),
            });
        }
    }
    Ok(DonutMap {
        goto: listing.number,
        otrip,
        triangles,
        pastings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::{String, ToString};
    use rand::SeedableRng;

    fn a(o: usize, s: usize) -> Assessor {
        Assessor::new(o, s).unwrap()
    }

    #[test]
    fn kite_three_labels() {
        let sed = Sedenions::new();
        let k = box_kite(&sed, 3).unwrap();
        assert_eq!(
            k.vertices,
            [a(2, 9), a(5, 14), a(7, 12), a(4, 15), a(6, 13), a(1, 10)]
        );
        assert_eq!(k.goto_ids, [5, 4, 2, 3]);
        assert_eq!(k.name(), "III");
        assert_eq!(box_kite(&sed, 8), Err(Error::InvalidKite(8)));
    }

    #[test]
    fn strut_products() {
        let sed = Sedenions::new();
        let p = strut_product(&sed, a(4, 15), a(7, 12), Sign::Plus, Sign::Plus).unwrap();
        assert_eq!(p, Element::from_terms(16, &[(3, 2)]).unwrap());
        let q = strut_product(&sed, a(4, 15), a(7, 12), Sign::Plus, Sign::Minus).unwrap();
        assert_eq!(q.single_term().unwrap().0, 8);
        assert_eq!(
            strut_product(&sed, a(4, 15), a(2, 9), Sign::Plus, Sign::Plus),
            Err(Error::NotAStrut(a(4, 15), a(2, 9)))
        );
        for k in assemble_box_kites(&sed) {
            assert_eq!(strut_signature(&sed, &k).unwrap(), k.signature as usize);
        }
    }

    #[test]
    fn triangles() {
        let sed = Sedenions::new();
        for k in assemble_box_kites(&sed) {
            let c = classify_triangles(&sed, &k).unwrap();
            assert_eq!((c.sail_zigzags, c.sail_trefoils), (1, 3));
            assert_eq!((c.vent_zigzags, c.vent_trefoils), (1, 3));
            assert!(
                c.sails_closed && c.vents_open && c.vent_edges_in_distinct_sails && c.faces_odd
            );
        }
    }

    #[test]
    fn osiris() {
        let sed = Sedenions::new();
        let op = osiris_partition(&sed);
        assert!(op.cell(1, 9).is_none());
        let c = op.cell(1, 13).unwrap();
        assert_eq!(c.entries[0].goto, 1);
        assert_eq!(c.entries[0].partners, [a(2, 14), a(3, 15)]);
        assert_eq!(c.entries[1].goto, 3);
        assert_eq!(c.entries[1].partners, [a(6, 10), a(7, 11)]);
        let st = op.stripped();
        assert!(!st[2].contains(&Some(3)));
    }

    #[test]
    fn lanyard_counts() {
        let sed = Sedenions::new();
        let k = box_kite(&sed, 3).unwrap();
        let c = lanyard_census(&sed, &k, 12).unwrap();
        assert_eq!(c.tray_racks, 6);
        assert_eq!(c.complete(6), 8);
        assert!(c.complete(10) > 0 && c.complete(12) > 0);
        assert_eq!(c.cats_cradles, 2);
        assert!(c.perimeters > 0 && c.waltz_bands > 0);
        assert!(c.double_zigzags > 0);
        assert!(c.faces_odd && c.squares_even);
        assert!(lanyard_census(&sed, &k, 2).is_err());
    }

    #[test]
    fn strut_cycle_kite_three() {
        let sed = Sedenions::new();
        let k = box_kite(&sed, 3).unwrap();
        let cyc: Vec<String> = strut_plane_cycle(&sed, &k)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(
            cyc,
            [
                "(1 + 10) + (2 - 9)",
                "(4 - 15) + (7 + 12)",
                "(6 + 13) + (5 - 14)",
                "(1 - 10) + (2 + 9)",
                "(4 + 15) + (7 - 12)",
                "(6 - 13) + (5 + 14)",
            ]
        );
    }

    #[test]
    fn dna_kite_three() {
        let sed = Sedenions::new();
        let k = box_kite(&sed, 3).unwrap();
        let r = recombinant_dna(&sed, &k, 1).unwrap();
        assert_eq!(r.column.target, 6);
        assert_eq!(format!("{}", r.column.products[0]), "(1 + 15) + (7 - 9)");
        assert_eq!(format!("{}", r.column.products[1]), "(4 + 10) + (2 - 12)");
        assert_eq!(r.diagonal.target, 5);
        assert_eq!(format!("{}", r.diagonal.products[0]), "(1 - 12) + (4 + 9)");
        assert_eq!(format!("{}", r.diagonal.products[1]), "(2 - 15) + (7 + 10)");
        let targets: Vec<(u8, u8)> = (1..=3)
            .map(|p| {
                let r = recombinant_dna(&sed, &k, p).unwrap();
                (r.column.target, r.diagonal.target)
            })
            .collect();
        assert_eq!(targets, [(6, 5), (1, 2), (4, 7)]);
        assert_eq!(recombinant_dna(&sed, &k, 7), Err(Error::InvalidPosition(7)));
    }

    #[test]
    fn seinfeld_kite_three() {
        let sed = Sedenions::new();
        let k = box_kite(&sed, 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let c = seinfeld_census(&sed, &k, 5, &mut rng).unwrap();
        assert_eq!(c.cases, [24, 48, 12, 6, 1, 48, 24, 12, 6]);
        assert_eq!(c.hyperplanes, 6);
        assert!(c.samples_zero);
    }

    #[test]
    fn donut_one() {
        let sed = Sedenions::new();
        let d = donut_map(&sed, sed.otrips()[0]).unwrap();
        let kites: BTreeSet<u8> = d.triangles.iter().map(|t| t.kite).collect();
        assert_eq!(kites, [4, 5, 6, 7].into_iter().collect());
        assert_eq!(d.triangle(Compass::North).kite, 4);
        assert_eq!(d.triangle(Compass::South).kite, 5);
        assert_eq!(d.triangle(Compass::West).kite, 7);
        assert_eq!(d.pastings.len(), 6);
        assert_eq!(
            d.pastings.iter().filter(|p| p.seam == Seam::Side).count(),
            2
        );
        assert_eq!(d.couplings().len(), 24);
        assert!(d.center().iter().all(|x| x.o() == 1));
    }

    #[test]
    fn roman_round_trip() {
        for s in 1..=7 {
            assert_eq!(parse_kite(roman(s).unwrap()), Ok(s));
        }
        assert_eq!(parse_kite("vii"), Ok(7));
        assert_eq!(parse_kite("5"), Ok(5));
        assert!(parse_kite("VIII").is_err());
    }
}

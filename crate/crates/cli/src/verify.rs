//! The verification suite. Every check has a stable id and maps to one
//! acceptance criterion; a report passes only if every check does.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use sedenion_core::boxkite::{
    assemble_box_kites, box_kite, classify_triangles, lanyard_census, lanyards, osiris_partition,
    recombinant_dna, seinfeld_census, strut_product, strut_signature,
};
use sedenion_core::cdalgebra::triple_count;
use sedenion_core::flowmorph::{
    counting_order_search, eight_ball_copies, is_flowmorphic, labeling_of_copy, missigned_triples,
    moreno_copy, moreno_scan, reversal_multiplicities,
};
use sedenion_core::pathion::{hyper_box_kite, verify_hyper_edges};
use sedenion_core::{
    Assessor, CdAlgebra, DenseElement, Orientation, Sedenions, Sign, TrioKind, Triple,
};

use crate::fixtures::{self, OsirisExceptionKind};
use crate::render::{self, TableFormat};

pub const DEFAULT_SEED: u64 = 0x5EDE_4104;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Core,
    Boxkite,
    Flowmorph,
    Pathion,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub criterion: u8,
    pub suite: Suite,
    pub description: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Default)]
pub struct Probe {
    details: Vec<String>,
    failures: Vec<String>,
}

impl Probe {
    fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }
}

pub struct Context {
    pub sed: Sedenions,
    pub seed: u64,
}

pub struct CheckDef {
    pub id: &'static str,
    pub criterion: u8,
    pub suite: Suite,
    pub description: &'static str,
    run: fn(&Context, &mut Probe),
}

pub const CHECKS: &[CheckDef] = &[
    CheckDef {
        id: "table-fidelity",
        criterion: 1,
        suite: Suite::Core,
        description: "16x16 table matches the golden table modulo listed misprints",
        run: table_fidelity,
    },
    CheckDef {
        id: "triple-counts",
        criterion: 2,
        suite: Suite::Core,
        description: "1/7/35/155 associative triples; O-trip and S-trip lists match",
        run: triple_counts,
    },
    CheckDef {
        id: "zero-divisor-completeness",
        criterion: 3,
        suite: Suite::Core,
        description: "brute force finds 42 assessors, 84 edges, 168 couplings, 28 trios",
        run: completeness,
    },
    CheckDef {
        id: "goto-listings",
        criterion: 4,
        suite: Suite::Core,
        description: "7 GoTo listings, automorphemes, rosters, exclusion sets, zigzag first",
        run: goto_listings,
    },
    CheckDef {
        id: "osiris-partition",
        criterion: 4,
        suite: Suite::Boxkite,
        description: "42 Osiris cells match the golden partition modulo listed misprints",
        run: osiris,
    },
    CheckDef {
        id: "box-kites",
        criterion: 5,
        suite: Suite::Boxkite,
        description: "7 kites partition the assessors and match the strut table",
        run: box_kites,
    },
    CheckDef {
        id: "production-rules",
        criterion: 6,
        suite: Suite::Core,
        description: "Rule 1 idempotent, Rule 2 twist/involution, Rule 3 double membership",
        run: production_rules,
    },
    CheckDef {
        id: "recombinant-dna",
        criterion: 7,
        suite: Suite::Boxkite,
        description: "Kite III twists land on struts of VI, I, IV and V, II, VII",
        run: dna,
    },
    CheckDef {
        id: "seinfeld-census",
        criterion: 8,
        suite: Suite::Boxkite,
        description: "per-kite case counts, sampled zero products, 42 hyperplanes",
        run: seinfeld,
    },
    CheckDef {
        id: "flowmorph",
        criterion: 9,
        suite: Suite::Flowmorph,
        description: "sign-pattern reversals, counting order, Moreno copies and conflicts",
        run: flowmorph,
    },
    CheckDef {
        id: "pathion",
        criterion: 10,
        suite: Suite::Pathion,
        description: "maximal 32-D kite struts and census; 16-D kites match the strut table",
        run: pathion,
    },
    CheckDef {
        id: "numeric-identities",
        criterion: 11,
        suite: Suite::Core,
        description: "zip identity on a 24x24 grid; flexible power law at N = 4, 5",
        run: numeric,
    },
    CheckDef {
        id: "lanyard-census",
        criterion: 12,
        suite: Suite::Boxkite,
        description: "tray-racks, complete 6/10/12-cycles, perimeters, cat's cradles, odd faces",
        run: lanyard,
    },
];

fn execute(def: &CheckDef, ctx: &Context) -> Check {
    let mut p = Probe::default();
    (def.run)(ctx, &mut p);
    Check {
        id: def.id,
        criterion: def.criterion,
        suite: def.suite,
        description: def.description,
        passed: p.failures.is_empty(),
        details: p.details,
        failures: p.failures,
    }
}

pub fn run(suite: Suite, seed: u64) -> VerificationReport {
    let ctx = Context {
        sed: Sedenions::new(),
        seed,
    };
    let checks: Vec<Check> = CHECKS
        .iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| execute(c, &ctx))
        .collect();
    let passed = checks.iter().filter(|c| c.passed).count();
    VerificationReport {
        suite,
        seed,
        summary: Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        },
        checks,
    }
}

/// Runs the checks tied to one acceptance criterion.
pub fn run_criterion(criterion: u8, seed: u64) -> Vec<Check> {
    let ctx = Context {
        sed: Sedenions::new(),
        seed,
    };
    CHECKS
        .iter()
        .filter(|c| c.criterion == criterion)
        .map(|c| execute(c, &ctx))
        .collect()
}

// ---------------------------------------------------------------- checks

fn table_fidelity(ctx: &Context, p: &mut Probe) {
    let printed = match fixtures::sedenion_table() {
        Ok(t) => t,
        Err(e) => return p.ensure(false, || e.to_string()),
    };
    let exceptions = fixtures::table_exceptions().unwrap_or_default();
    let generated = ctx.sed.algebra().emit_table();
    let mut documented = 0;
    for i in 0..16 {
        for j in 0..16 {
            if printed[i][j] == generated[i][j] {
                continue;
            }
            let known = exceptions.iter().any(|e| {
                (e.row, e.col) == (i, j)
                    && e.printed == printed[i][j]
                    && e.expected == generated[i][j]
            });
            if known {
                documented += 1;
            } else {
                p.ensure(false, || {
                    format!(
                        "cell ({i}, {j}): printed {:?}, generated {:?}",
                        printed[i][j], generated[i][j]
                    )
                });
            }
        }
    }
    p.ensure(documented == exceptions.len(), || {
        format!(
            "{} exceptions listed, {documented} observed",
            exceptions.len()
        )
    });
    let pretty = render::table(ctx.sed.algebra(), TableFormat::Pretty);
    let differing = pretty
        .lines()
        .zip(fixtures::SEDENION_TABLE.lines())
        .filter(|(a, b)| a != b)
        .count();
    p.ensure(differing == exceptions.len(), || {
        format!("pretty layout differs from the golden file on {differing} lines")
    });
    for e in &exceptions {
        p.note(format!(
            "documented misprint at ({}, {}): {}",
            e.row, e.col, e.note
        ));
    }
}

fn triple_counts(_: &Context, p: &mut Probe) {
    for (n, want) in [(2u32, 1usize), (3, 7), (4, 35), (5, 155)] {
        let got = CdAlgebra::new(n).map(|a| a.triples().len()).unwrap_or(0);
        p.ensure(got == want && triple_count(n) == want, || {
            format!(
                "N = {n}: {got} triples, formula {}, expected {want}",
                triple_count(n)
            )
        });
    }
    let (otrips, strips) = match fixtures::trips() {
        Ok(t) => t,
        Err(e) => return p.ensure(false, || e.to_string()),
    };
    let alg = CdAlgebra::new(4).expect("sedenions");
    let all: Vec<[usize; 3]> = alg.triples().iter().map(Triple::as_array).collect();
    let gen_o: Vec<[usize; 3]> = all
        .iter()
        .copied()
        .filter(|t| t.iter().all(|&i| i < 8))
        .collect();
    let gen_s: BTreeSet<[usize; 3]> = all
        .iter()
        .copied()
        .filter(|t| t.iter().any(|&i| i >= 8))
        .collect();
    p.ensure(gen_o == otrips, || format!("O-trips {gen_o:?}"));
    p.ensure(gen_s == strips.iter().copied().collect(), || {
        "S-trip list differs".to_string()
    });
    p.note(format!(
        "{} O-trips and {} S-trips match",
        otrips.len(),
        strips.len()
    ));
}

fn completeness(ctx: &Context, p: &mut Probe) {
    let scan = ctx.sed.brute_force_scan();
    let counts = (scan.planes.len(), scan.edges.len(), scan.couplings.len());
    p.ensure(counts == (42, 84, 168), || format!("scan found {counts:?}"));
    let trios = ctx.sed.enumerate_trios().len();
    p.ensure(trios == 28, || format!("{trios} trios"));
    let cells: BTreeSet<(usize, usize)> = Assessor::all().iter().map(|a| (a.o(), a.s())).collect();
    let outside: Vec<_> = scan
        .planes
        .iter()
        .filter(|pl| !cells.contains(pl))
        .collect();
    p.ensure(outside.is_empty(), || {
        format!("planes outside the Osiris cells: {outside:?}")
    });
    p.ensure(scan.exogamous && scan.shared_g, || {
        "exogamy or shared-g law broken".to_string()
    });
    p.note(format!(
        "{} planes, {} edges, {} couplings, {trios} trios",
        counts.0, counts.1, counts.2
    ));
}

fn goto_listings(ctx: &Context, p: &mut Probe) {
    let printed = match fixtures::goto_listings() {
        Ok(t) => t,
        Err(e) => return p.ensure(false, || e.to_string()),
    };
    let listings = ctx.sed.goto_listings();
    p.ensure(listings.len() == 7, || {
        format!("{} listings", listings.len())
    });
    for (l, f) in listings.iter().zip(&printed) {
        let n = l.number;
        p.ensure(n == f.number && l.otrip().as_array() == f.otrip, || {
            format!("GoTo #{n} header")
        });
        p.ensure(l.automorpheme.units() == f.automorpheme, || {
            format!("GoTo #{n} automorpheme")
        });
        for (c, (col, want)) in l.columns.iter().zip(&f.columns).enumerate() {
            let got: Vec<String> = col.cycle[..3]
                .iter()
                .map(|x| fixtures::squeeze(&x.to_string()))
                .collect();
            p.ensure(got == want.to_vec(), || {
                format!("GoTo #{n} column {}: {got:?}", c + 1)
            });
        }
        p.ensure(l.assessors().len() == 12, || format!("GoTo #{n} roster"));
        let t = l.otrip();
        let mut excl = [8, 8 ^ t.a, 8 ^ t.b, 8 ^ t.c];
        excl.sort_unstable();
        p.ensure(l.automorpheme.excluded() == excl, || {
            format!("GoTo #{n} exclusion set")
        });
        let kinds: Vec<TrioKind> = l.columns.iter().map(|c| c.trio.kind).collect();
        p.ensure(
            kinds[0] == TrioKind::Zigzag && kinds[1..].iter().all(|k| *k == TrioKind::Trefoil),
            || format!("GoTo #{n} trio kinds {kinds:?}"),
        );
    }
    p.ensure(ctx.sed.eight_ball_check().passed(), || {
        "8-Ball exclusion fails".to_string()
    });
    p.note("7 listings match line for line; 8-Ball exclusion holds");
}

fn osiris(ctx: &Context, p: &mut Probe) {
    let (printed, exceptions) = match (fixtures::osiris(), fixtures::osiris_exceptions()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return p.ensure(false, || e.to_string()),
    };
    let part = osiris_partition(&ctx.sed);
    let mut documented = 0;
    for (&(o, s), want) in &printed {
        let Some(cell) = part.cell(o, s) else {
            p.ensure(false, || format!("no generated cell ({o}, {s})"));
            continue;
        };
        let got: Vec<fixtures::OsirisFixtureEntry> = cell
            .entries
            .iter()
            .map(|e| fixtures::OsirisFixtureEntry {
                goto: e.goto,
                partners: e.partners.map(|a| (a.o(), a.s())),
            })
            .collect();
        let exception = exceptions.iter().find(|e| e.cell == (o, s));
        match exception.map(|e| e.kind) {
            None => p.ensure(&got == want, || {
                format!("cell ({o}, {s}): generated {got:?}")
            }),
            Some(OsirisExceptionKind::PartnerOrder) => {
                let as_sets =
                    |v: &[fixtures::OsirisFixtureEntry]| -> Vec<(usize, BTreeSet<(usize, usize)>)> {
                        v.iter()
                            .map(|e| (e.goto, e.partners.into_iter().collect()))
                            .collect()
                    };
                p.ensure(&got != want && as_sets(&got) == as_sets(want), || {
                    format!("cell ({o}, {s}) is not a pure ordering misprint")
                });
                documented += 1;
            }
            Some(OsirisExceptionKind::Garbled) => {
                p.ensure(&got != want, || {
                    format!("cell ({o}, {s}) listed as garbled but matches")
                });
                documented += 1;
            }
        }
    }
    p.ensure(
        part.stripped()
            .iter()
            .flatten()
            .filter(|c| c.is_some())
            .count()
            == 42,
        || "stripped partition is not 42 cells".to_string(),
    );
    for e in &exceptions {
        p.note(format!(
            "documented misprint at ({}, {}): {}",
            e.cell.0, e.cell.1, e.note
        ));
    }
    p.note(format!(
        "{} cells match, {documented} documented",
        printed.len() - documented
    ));
}

fn box_kites(ctx: &Context, p: &mut Probe) {
    let sed = &ctx.sed;
    let kites = assemble_box_kites(sed);
    let rows = match fixtures::strut_table() {
        Ok(r) => r,
        Err(e) => return p.ensure(false, || e.to_string()),
    };
    let mut seen: Vec<Assessor> = kites.iter().flat_map(|k| k.vertices).collect();
    seen.sort();
    seen.dedup();
    p.ensure(seen.len() == 42 && kites.len() * 6 == 42, || {
        "kites do not partition the 42".to_string()
    });
    let mut escapes = 0;
    let mut in_kite = 0;
    for (k, row) in kites.iter().zip(&rows) {
        let name = k.name();
        let vs = k.vertices.map(|a| (a.o(), a.s()));
        p.ensure(k.signature == row.signature && vs == row.vertices, || {
            format!("kite {name} vertices {vs:?}")
        });
        p.ensure(k.goto_ids == row.gotos, || {
            format!("kite {name} GoTo ids {:?}", k.goto_ids)
        });
        p.ensure(strut_signature(sed, k) == Ok(k.signature as usize), || {
            format!("kite {name} strut signature")
        });
        match classify_triangles(sed, k) {
            Ok(t) => p.ensure(
                (
                    t.sail_zigzags,
                    t.sail_trefoils,
                    t.vent_zigzags,
                    t.vent_trefoils,
                ) == (1, 3, 1, 3)
                    && t.sails_closed
                    && t.vents_open,
                || format!("kite {name} triangle census {t:?}"),
            ),
            Err(e) => p.ensure(false, || e.to_string()),
        }
        let s = k.signature as usize;
        let copy = [0, s, 8, 8 + s];
        for (i, &a) in k.vertices.iter().enumerate() {
            for &b in &k.vertices[i + 1..] {
                let strut = k.strut_partner(a) == Some(b);
                let zero = [a.up(), a.down()].iter().any(|&x| {
                    [b.up(), b.down()]
                        .iter()
                        .any(|&y| sed.is_zero_coupling(x, y))
                });
                p.ensure(zero != strut, || {
                    format!("kite {name}: {a} {b} strut={strut} zero={zero}")
                });
                if strut {
                    for (sa, sb) in [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus)] {
                        let ok = strut_product(sed, a, b, sa, sb)
                            .map(|e| e.support().all(|x| copy.contains(&x)))
                            .unwrap_or(false);
                        p.ensure(ok, || {
                            format!("kite {name}: strut product {a} {b} leaves the copy")
                        });
                    }
                } else {
                    for x in [a.up(), a.down()] {
                        for y in [b.up(), b.down()] {
                            let e = sed.product(x, y);
                            if !e.is_zero() {
                                in_kite += 1;
                                if !e.support().all(|i| copy.contains(&i)) {
                                    escapes += 1;
                                }
                            }
                        }
                    }
                }
            }
            for (x, y) in [
                (Orientation::U, Orientation::D),
                (Orientation::U, Orientation::U),
            ] {
                let e = sed.product(a.diagonal(x), a.diagonal(y));
                p.ensure(e.support().all(|i| copy.contains(&i)), || {
                    format!("kite {name}: {a} squared")
                });
            }
        }
    }
    p.note("strut and same-assessor products lie in the copy {1, e_s, e_8, e_(8+s)}");
    p.note(format!(
        "{escapes} of {in_kite} nonzero products across non-strut edges leave it, e.g. (e1 + e13)(e2 + e14) = 2e3 + 2e15"
    ));
}

fn production_rules(ctx: &Context, p: &mut Probe) {
    let sed = &ctx.sed;
    let edges = sed.edges();
    for &(a, b) in &edges {
        match sed.rule1_complete(a, b) {
            Ok(t) => {
                let c = t.members.iter().copied().find(|m| *m != a && *m != b);
                let stable = c.is_some_and(|c| {
                    sed.rule1_complete(a, c).as_ref() == Ok(&t)
                        && sed.rule1_complete(b, c).as_ref() == Ok(&t)
                });
                p.ensure(
                    stable && sed.rule1_complete(b, a).as_ref() == Ok(&t),
                    || format!("Rule 1 unstable on {a} {b}"),
                );
            }
            Err(e) => p.ensure(false, || format!("Rule 1 on {a} {b}: {e}")),
        }
    }
    let couplings = sed.enumerate_couplings();
    for &c in &couplings {
        let Ok(tw) = sed.rule2_twist(c) else {
            p.ensure(false, || format!("Rule 2 failed on {c}"));
            continue;
        };
        p.ensure(
            sed.is_zero_coupling(tw.result.left(), tw.result.right()),
            || format!("twist of {c} nonzero"),
        );
        p.ensure(
            !tw.failed.is_zero() && tw.failed.support().all(|i| i == tw.g),
            || format!("failed branch of {c} is {}", tw.failed),
        );
        let twice = sed
            .twist_pairing(c.as_pairing())
            .and_then(|(q, _)| sed.twist_pairing(q))
            .map(|(q, _)| q);
        match twice {
            Ok(q) => p.ensure(
                q.to_coupling().assessors() == c.assessors() && q.flipped().to_coupling() == c,
                || format!("twisting {c} twice gives {q}"),
            ),
            Err(e) => p.ensure(false, || e.to_string()),
        }
    }
    let member = sed.goto_memberships();
    p.ensure(
        member.len() == 42 && member.values().all(|v| v.len() == 2),
        || "an assessor is not in exactly two listings".to_string(),
    );
    for a in Assessor::all() {
        let ok = sed
            .rule3_relocate(a)
            .map(|pair| {
                pair.iter()
                    .all(|(auto, trio)| auto.contains(a) && trio.contains(a))
            })
            .unwrap_or(false);
        p.ensure(ok, || format!("Rule 3 on {a}"));
    }
    p.note(format!(
        "{} edges, {} couplings; twisting twice flips both diagonals of the same assessor pair",
        edges.len(),
        couplings.len()
    ));
}

fn dna(ctx: &Context, p: &mut Probe) {
    let sed = &ctx.sed;
    let Ok(k) = box_kite(sed, 3) else {
        return p.ensure(false, || "no kite III".to_string());
    };
    let mut column = Vec::new();
    let mut diagonal = Vec::new();
    for pos in 1..=3 {
        match recombinant_dna(sed, &k, pos) {
            Ok(r) => {
                for twist in [&r.column, &r.diagonal] {
                    let target = box_kite(sed, twist.target);
                    for sum in &twist.products {
                        let (x, y) = (sum.first.assessor, sum.second.assessor);
                        let ok = target.as_ref().is_ok_and(|t| t.strut_partner(x) == Some(y));
                        p.ensure(ok, || {
                            format!("position {pos}: {sum} is not a strut of {}", twist.target)
                        });
                    }
                }
                p.note(format!(
                    "position {pos}: column {} {} -> {}, diagonal {} {} -> {}",
                    r.column.products[0],
                    r.column.products[1],
                    r.column.target,
                    r.diagonal.products[0],
                    r.diagonal.products[1],
                    r.diagonal.target
                ));
                column.push(r.column.target);
                diagonal.push(r.diagonal.target);
            }
            Err(e) => p.ensure(false, || format!("position {pos}: {e}")),
        }
    }
    p.ensure(column == [6, 1, 4], || format!("column targets {column:?}"));
    p.ensure(diagonal == [5, 2, 7], || {
        format!("diagonal targets {diagonal:?}")
    });
}

fn seinfeld(ctx: &Context, p: &mut Probe) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut total = 0;
    for k in assemble_box_kites(&ctx.sed) {
        match seinfeld_census(&ctx.sed, &k, 100, &mut rng) {
            Ok(c) => {
                p.ensure(c.cases == [24, 48, 12, 6, 1, 48, 24, 12, 6], || {
                    format!("kite {} cases {:?}", k.name(), c.cases)
                });
                p.ensure(c.samples_zero, || {
                    format!("kite {}: a sampled product was nonzero", k.name())
                });
                total += c.hyperplanes;
                if k.signature == 3 {
                    p.note(format!(
                        "kite III: {} scalar samples, case 3 over all edges {}",
                        c.samples_checked, c.case3_all_edges
                    ));
                }
            }
            Err(e) => p.ensure(false, || e.to_string()),
        }
    }
    p.ensure(total == 42, || format!("{total} hyperplanes"));
    p.note(format!("{total} hyperplanes"));
}

fn flowmorph(ctx: &Context, p: &mut Probe) {
    let alg = ctx.sed.algebra();
    let rev = reversal_multiplicities();
    p.ensure(
        rev.keys().all(|k| [0, 3, 4, 7].contains(k)) && rev.values().sum::<usize>() == 128,
        || format!("reversal counts {rev:?}"),
    );
    p.note(format!("reversal multiplicities {rev:?}"));
    let order = counting_order_search();
    p.ensure(!order.zero_attainable, || {
        "a sign pattern puts all lines in counting order".to_string()
    });
    match moreno_copy(alg, 1, 2, 12) {
        Ok(copy) => {
            p.ensure(copy.to_string() == "(1, 2, 3, -15, 14, -13, 12)", || {
                format!("Moreno copy {copy}")
            });
            let mis: Vec<[usize; 3]> = missigned_triples(alg, &copy)
                .map(|v| v.iter().map(Triple::as_array).collect())
                .unwrap_or_default();
            p.ensure(mis == [[3, 4, 7], [3, 6, 5]], || {
                format!("mis-signed {mis:?}")
            });
        }
        Err(e) => p.ensure(false, || e.to_string()),
    }
    match eight_ball_copies(alg) {
        Ok(copies) => {
            for c in copies {
                let flow = labeling_of_copy(alg, &c)
                    .and_then(|l| is_flowmorphic(&l))
                    .unwrap_or(false);
                let clean = missigned_triples(alg, &c)
                    .map(|m| m.is_empty())
                    .unwrap_or(false);
                p.ensure(flow && clean && !c.harbors_zero_divisors(), || {
                    format!("8-Ball copy {c}")
                });
            }
        }
        Err(e) => p.ensure(false, || e.to_string()),
    }
    let scan = moreno_scan(alg);
    p.ensure(
        scan.harboring > 0 && scan.harboring == scan.harboring_expected,
        || {
            format!(
                "{} of {} harboring copies show the two conflicts",
                scan.harboring_expected, scan.harboring
            )
        },
    );
    p.ensure(
        scan.clean == scan.clean_expected && scan.anomalies.is_empty(),
        || format!("anomalies {:?}", scan.anomalies),
    );
    p.note(format!(
        "{} inputs: {} harboring with 2 conflicts each, {} clean",
        scan.inputs, scan.harboring, scan.clean
    ));
}

fn pathion(_: &Context, p: &mut Probe) {
    let Ok(k) = hyper_box_kite(5, 15) else {
        return p.ensure(false, || "no (5, 15) kite".to_string());
    };
    let got: Vec<((usize, usize), (usize, usize))> = k
        .struts
        .iter()
        .map(|(a, b)| ((a.o, a.s), (b.o, b.s)))
        .collect();
    p.ensure(got == fixtures::PATHION_STRUTS, || {
        format!("struts {got:?}")
    });
    p.ensure(k.vertices.iter().all(|v| v.o + v.s == 31), || {
        "vertex sums".to_string()
    });
    let alg5 = CdAlgebra::new(5).expect("pathions");
    match verify_hyper_edges(&alg5, &k) {
        Ok(c) => {
            p.ensure(c.zero_struts == 0, || {
                format!("{} struts zero-divide", c.zero_struts)
            });
            p.ensure(
                (c.pairs, c.struts, c.edges, c.trios) == (91, 7, 36, 12),
                || format!("census {c:?}"),
            );
            p.note(format!(
                "(5, 15): {} pairs, {} struts, {} zero-dividing edges, {} silent pairs, {} trios ({} zigzag)",
                c.pairs, c.struts, c.edges, c.silent_pairs, c.trios, c.zigzags
            ));
        }
        Err(e) => p.ensure(false, || e.to_string()),
    }
    let full: Vec<usize> = (1..16)
        .filter(|&s| {
            hyper_box_kite(5, s)
                .and_then(|k| verify_hyper_edges(&alg5, &k))
                .is_ok_and(|c| (c.edges, c.trios, c.silent_pairs) == (84, 28, 0))
        })
        .collect();
    p.ensure(full == (1..=8).collect::<Vec<_>>(), || {
        format!("84-edge signatures {full:?}")
    });
    p.note("84 edges and 28 trios hold for signatures 1..=8 only");
    let rows = fixtures::strut_table().unwrap_or_default();
    let alg4 = CdAlgebra::new(4).expect("sedenions");
    for row in &rows {
        let s = row.signature as usize;
        let Ok(h) = hyper_box_kite(4, s) else {
            p.ensure(false, || format!("no (4, {s}) kite"));
            continue;
        };
        let mut want = row.vertices.to_vec();
        want.sort_unstable();
        let got: Vec<(usize, usize)> = h.vertices.iter().map(|v| (v.o, v.s)).collect();
        p.ensure(got == want, || format!("(4, {s}) vertices {got:?}"));
        let c = verify_hyper_edges(&alg4, &h);
        p.ensure(
            c.as_ref()
                .is_ok_and(|c| (c.edges, c.trios, c.zero_struts) == (12, 4, 0)),
            || format!("(4, {s}) census {c:?}"),
        );
    }
}

fn unit_element(rng: &mut ChaCha8Rng, dim: usize) -> DenseElement {
    let mut x = DenseElement::zero(dim);
    for c in x.coeffs.iter_mut() {
        *c = rng.gen_range(-1.0..1.0);
    }
    let n = x.norm();
    x.coeffs.iter_mut().for_each(|c| *c /= n);
    x
}

fn numeric(ctx: &Context, p: &mut Probe) {
    let sed = &ctx.sed;
    let mut zip_max = 0f64;
    for c in sed.enumerate_couplings() {
        for i in 0..24 {
            for j in 0..24 {
                let (x, y) = (2.0 * PI * i as f64 / 24.0, 2.0 * PI * j as f64 / 24.0);
                match sed.zip_check(c, x, y) {
                    Ok(r) => zip_max = zip_max.max(r),
                    Err(e) => p.ensure(false, || e.to_string()),
                }
            }
        }
    }
    p.ensure(zip_max < 1e-12, || format!("zip residual {zip_max:e}"));
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut flex_max = 0f64;
    for n in [4, 5] {
        let alg = CdAlgebra::new(n).expect("in range");
        for _ in 0..100 {
            let x = unit_element(&mut rng, alg.dim());
            let pow: Vec<DenseElement> = (1..=8)
                .map(|k| alg.pow_element(&x, k).expect("finite"))
                .collect();
            for a in 1..8 {
                for b in 1..=(8 - a) {
                    let lhs = alg.mul_dense(&pow[a - 1], &pow[b - 1]).expect("same dim");
                    flex_max = flex_max.max(lhs.max_abs_diff(&pow[a + b - 1]));
                }
            }
        }
    }
    p.ensure(flex_max < 1e-9, || {
        format!("flexible law residual {flex_max:e}")
    });
    p.note(format!(
        "max zip residual {zip_max:.1e} over 168 couplings x 576 angle pairs"
    ));
    p.note(format!(
        "max flexible-law residual {flex_max:.1e} over 200 unit elements"
    ));
}

fn lanyard(ctx: &Context, p: &mut Probe) {
    let sed = &ctx.sed;
    let mut shown = false;
    for k in assemble_box_kites(sed) {
        let name = k.name();
        let c = match lanyard_census(sed, &k, 12) {
            Ok(c) => c,
            Err(e) => return p.ensure(false, || e.to_string()),
        };
        p.ensure(c.tray_racks == 6, || {
            format!("kite {name}: {} tray-racks", c.tray_racks)
        });
        p.ensure(c.complete(6) == 8, || {
            format!("kite {name}: {} complete 6-cycles", c.complete(6))
        });
        let triangles: BTreeSet<BTreeSet<Assessor>> = k
            .sails
            .iter()
            .map(|s| s.member_set())
            .chain(k.vents.iter().map(|v| v.members.into_iter().collect()))
            .collect();
        let six: BTreeSet<BTreeSet<Assessor>> = lanyards(sed, &k, 6)
            .into_iter()
            .filter(|l| l.complete && l.len() == 6)
            .map(|l| l.assessors())
            .collect();
        p.ensure(triangles.len() == 8 && six == triangles, || {
            format!("kite {name}: complete 6-cycles are not the sails and vents")
        });
        p.ensure(c.complete(10) >= 1 && c.complete(12) >= 1, || {
            format!("kite {name}: no complete 10/12-cycle")
        });
        p.ensure(c.perimeters >= 1 && c.cats_cradles >= 1, || {
            format!("kite {name}: perimeter/cradle missing")
        });
        p.ensure(c.faces_odd, || {
            format!("kite {name}: a face has even sign product")
        });
        if !shown {
            shown = true;
            let by: BTreeMap<usize, (usize, usize)> = c
                .by_length
                .iter()
                .map(|(l, n)| (*l, (n.cycles, n.complete)))
                .collect();
            p.note(format!("per kite (cycles, complete) by length: {by:?}"));
            p.note(format!(
                "tray-racks {}, butterflies {}, perimeters {}, waltz bands {}, cat's cradles {}",
                c.tray_racks, c.butterflies, c.perimeters, c.waltz_bands, c.cats_cradles
            ));
        }
    }
}

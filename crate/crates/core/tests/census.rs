use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sedenion_core::boxkite::{
    assemble_box_kites, classify_triangles, lanyard_census, osiris_partition, recombinant_dna,
    seinfeld_census,
};
use sedenion_core::flowmorph::{
    counting_order_search, eight_ball_copies, is_flowmorphic, labeling_of_copy, moreno_scan,
};
use sedenion_core::pathion::{hyper_box_kite, verify_hyper_edges};
use sedenion_core::{CdAlgebra, Sedenions, TrioKind};

#[test]
fn brute_force_agrees_with_rules() {
    let sed = Sedenions::new();
    let scan = sed.brute_force_scan();
    assert_eq!(
        (scan.planes.len(), scan.edges.len(), scan.couplings.len()),
        (42, 84, 168)
    );
    assert!(scan.exogamous && scan.shared_g);
    assert_eq!(sed.enumerate_couplings().len(), 168);
    assert_eq!(sed.edges().len(), 84);
    let trios = sed.enumerate_trios();
    assert_eq!(trios.len(), 28);
    assert_eq!(
        trios.iter().filter(|t| t.kind == TrioKind::Zigzag).count(),
        7
    );
    assert!(sed.eight_ball_check().passed());
}

#[test]
fn goto_listings_cover_twice() {
    let sed = Sedenions::new();
    let listings = sed.goto_listings();
    assert_eq!(listings.len(), 7);
    for l in &listings {
        assert_eq!(l.assessors().len(), 12);
        assert_eq!(l.columns[0].trio.kind, TrioKind::Zigzag);
        assert!(l.columns[1..]
            .iter()
            .all(|c| c.trio.kind == TrioKind::Trefoil));
    }
    assert!(sed.goto_memberships().values().all(|v| v.len() == 2));
}

#[test]
fn kites_and_their_triangles() {
    let sed = Sedenions::new();
    for k in assemble_box_kites(&sed) {
        let t = classify_triangles(&sed, &k).unwrap();
        assert_eq!((t.sail_zigzags, t.sail_trefoils), (1, 3));
        assert!(t.sails_closed && t.vents_open && t.faces_odd);
        for (i, a) in k.vertices.iter().enumerate() {
            for b in &k.vertices[i + 1..] {
                let strut = k.strut_partner(*a) == Some(*b);
                assert_eq!(sed.are_coassessors(*a, *b), !strut);
            }
        }
    }
}

#[test]
fn osiris_holds_every_assessor() {
    let sed = Sedenions::new();
    let p = osiris_partition(&sed);
    let filled = p.cells.iter().flatten().filter(|c| c.is_some()).count();
    assert_eq!(filled, 42);
    for o in 1..8 {
        assert!(p.cell(o, o + 8).is_none());
    }
}

#[test]
fn dna_reaches_all_other_kites() {
    let sed = Sedenions::new();
    for k in assemble_box_kites(&sed) {
        let mut reached: Vec<u8> = (1..=3)
            .flat_map(|pos| {
                let r = recombinant_dna(&sed, &k, pos).unwrap();
                [r.column.target, r.diagonal.target]
            })
            .collect();
        reached.sort_unstable();
        let want: Vec<u8> = (1..=7).filter(|s| *s != k.signature).collect();
        assert_eq!(reached, want, "kite {}", k.signature);
    }
}

#[test]
fn seinfeld_per_kite() {
    let sed = Sedenions::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut planes = 0;
    for k in assemble_box_kites(&sed) {
        let c = seinfeld_census(&sed, &k, 10, &mut rng).unwrap();
        assert_eq!(c.cases, [24, 48, 12, 6, 1, 48, 24, 12, 6]);
        assert!(c.samples_zero);
        planes += c.hyperplanes;
    }
    assert_eq!(planes, 42);
}

#[test]
fn lanyards_small_lengths() {
    let sed = Sedenions::new();
    for k in assemble_box_kites(&sed) {
        let c = lanyard_census(&sed, &k, 6).unwrap();
        assert_eq!(c.tray_racks, 6);
        assert_eq!(c.complete(6), 8);
        assert!(c.faces_odd && c.squares_even);
    }
}

#[test]
fn flowmorph_facts() {
    let alg = CdAlgebra::new(4).unwrap();
    let r = counting_order_search();
    assert!(!r.zero_attainable);
    assert!(r.reversal_counts.keys().all(|k| [0, 3, 4, 7].contains(k)));
    for c in eight_ball_copies(&alg).unwrap() {
        assert!(is_flowmorphic(&labeling_of_copy(&alg, &c).unwrap()).unwrap());
    }
    let scan = moreno_scan(&alg);
    assert_eq!((scan.harboring, scan.clean), (168, 168));
    assert!(scan.anomalies.is_empty());
}

#[test]
fn pathion_signatures() {
    let alg = CdAlgebra::new(5).unwrap();
    for s in 1..16 {
        let c = verify_hyper_edges(&alg, &hyper_box_kite(5, s).unwrap()).unwrap();
        assert_eq!(c.zero_struts, 0);
        assert_eq!(c.edges + c.silent_pairs + c.struts, c.pairs);
        if s <= 8 {
            assert_eq!((c.edges, c.trios, c.zigzags), (84, 28, 7));
        } else {
            assert_eq!((c.edges, c.trios, c.zigzags), (36, 12, 3));
        }
    }
}

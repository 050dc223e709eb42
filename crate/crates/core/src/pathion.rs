//! Box-kites beyond the sedenions, built by the strut-signature rule:
//! in the 2^N-ions with `H = 2^(N-1)`, the kite with signature `s` has a
//! vertex `(o, o ^ s ^ H)` for every `o` in `1..H` other than `s`, and its
//! struts join `(o, S)` to `(o ^ s, S ^ s)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::cdalgebra::{CdAlgebra, Element, Sign};
use crate::error::{Error, Result};

/// An `(o, S)` plane with `o < H < S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HyperVertex {
    pub o: usize,
    pub s: usize,
}

impl fmt::Display for HyperVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.o, self.s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HyperBoxKite {
    pub dim_exp: u32,
    pub signature: usize,
    /// Ascending by `o`.
    pub vertices: Vec<HyperVertex>,
    /// Each strut once, lower `o` first.
    pub struts: Vec<(HyperVertex, HyperVertex)>,
}

impl HyperBoxKite {
    pub fn strut_partner(&self, v: HyperVertex) -> HyperVertex {
        HyperVertex {
            o: v.o ^ self.signature,
            s: v.s ^ self.signature,
        }
    }

    pub fn is_maximal(&self) -> bool {
        self.signature == (1usize << (self.dim_exp - 1)) - 1
    }
}

pub fn hyper_box_kite(dim_exp: u32, signature: usize) -> Result<HyperBoxKite> {
    if !(4..=8).contains(&dim_exp) {
        return Err(Error::DimensionOutOfRange { dim_exp, max: 8 });
    }
    let half = 1usize << (dim_exp - 1);
    if signature == 0 || signature >= half {
        return Err(Error::InvalidSignature { signature });
    }
    let vertices: Vec<HyperVertex> = (1..half)
        .filter(|&o| o != signature)
        .map(|o| HyperVertex {
            o,
            s: o ^ signature ^ half,
        })
        .collect();
    let struts = vertices
        .iter()
        .filter(|v| v.o < v.o ^ signature)
        .map(|&v| {
            (
                v,
                HyperVertex {
                    o: v.o ^ signature,
                    s: v.s ^ signature,
                },
            )
        })
        .collect();
    Ok(HyperBoxKite {
        dim_exp,
        signature,
        vertices,
        struts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HyperCensus {
    pub vertices: usize,
    pub pairs: usize,
    pub struts: usize,
    /// Non-strut pairs with a zero-dividing signing.
    pub edges: usize,
    /// Non-strut pairs with no zero-dividing signing.
    pub silent_pairs: usize,
    /// Strut pairs that do zero-divide (expected none).
    pub zero_struts: usize,
    /// Rule-1-closed triangles.
    pub trios: usize,
    pub zigzags: usize,
    pub trefoils: usize,
}

fn diagonal(dim: usize, v: HyperVertex, sign: Sign) -> Result<Element> {
    Element::from_terms(dim, &[(v.o, 1), (v.s, sign.to_i64())])
}

/// `+` or `-` when the pair zero-divides with same or opposite signs.
fn edge_sign(alg: &CdAlgebra, x: HyperVertex, y: HyperVertex) -> Result<Option<Sign>> {
    let dim = alg.dim();
    let xu = diagonal(dim, x, Sign::Plus)?;
    for s in [Sign::Plus, Sign::Minus] {
        if alg.mul_element(&xu, &diagonal(dim, y, s)?)?.is_zero() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn verify_hyper_edges(alg: &CdAlgebra, k: &HyperBoxKite) -> Result<HyperCensus> {
    if alg.dim_exp() != k.dim_exp {
        return Err(Error::WrongAlgebra {
            expected_dim_exp: k.dim_exp,
            found_dim_exp: alg.dim_exp(),
        });
    }
    let n = k.vertices.len();
    let mut census = HyperCensus {
        vertices: n,
        pairs: n * (n - 1) / 2,
        struts: k.struts.len(),
        edges: 0,
        silent_pairs: 0,
        zero_struts: 0,
        trios: 0,
        zigzags: 0,
        trefoils: 0,
    };
    let mut sign = alloc::vec![alloc::vec![None; n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (k.vertices[i], k.vertices[j]);
            let es = edge_sign(alg, x, y)?;
            sign[i][j] = es;
            sign[j][i] = es;
            let strut = k.strut_partner(x) == y;
            match (strut, es.is_some()) {
                (true, true) => census.zero_struts += 1,
                (false, true) => census.edges += 1,
                (false, false) => census.silent_pairs += 1,
                (true, false) => {}
            }
        }
    }
    let pos = |v: HyperVertex| k.vertices.iter().position(|w| *w == v);
    let mut trios: BTreeSet<[usize; 3]> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if sign[i][j].is_none() {
                continue;
            }
            let (x, y) = (k.vertices[i], k.vertices[j]);
            let third = HyperVertex {
                o: x.o ^ y.o,
                s: x.o ^ y.s,
            };
            if let Some(t) = pos(third) {
                if sign[i][t].is_some() && sign[j][t].is_some() {
                    let mut key = [i, j, t];
                    key.sort_unstable();
                    trios.insert(key);
                }
            }
        }
    }
    census.trios = trios.len();
    for [i, j, t] in trios {
        let minus = [sign[i][j], sign[j][t], sign[i][t]]
            .iter()
            .filter(|s| **s == Some(Sign::Minus))
            .count();
        match minus {
            3 => census.zigzags += 1,
            1 => census.trefoils += 1,
            _ => {}
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pathion_maximal() {
        let k = hyper_box_kite(5, 15).unwrap();
        assert!(k.is_maximal());
        assert_eq!(k.vertices.len(), 14);
        assert!(k.vertices.iter().all(|v| v.o + v.s == 31));
        assert!(k
            .struts
            .contains(&(HyperVertex { o: 1, s: 30 }, HyperVertex { o: 14, s: 17 })));
        assert!(k
            .struts
            .contains(&(HyperVertex { o: 7, s: 24 }, HyperVertex { o: 8, s: 23 })));
        let alg = CdAlgebra::new(5).unwrap();
        let c = verify_hyper_edges(&alg, &k).unwrap();
        assert_eq!((c.pairs, c.struts, c.edges, c.trios), (91, 7, 36, 12));
        assert_eq!((c.zero_struts, c.silent_pairs), (0, 48));
        let low = verify_hyper_edges(&alg, &hyper_box_kite(5, 8).unwrap()).unwrap();
        assert_eq!((low.edges, low.trios, low.silent_pairs), (84, 28, 0));
    }

    #[test]
    fn sedenion_seven() {
        let k = hyper_box_kite(4, 7).unwrap();
        let pairs: Vec<(usize, usize)> = k.vertices.iter().map(|v| (v.o, v.s)).collect();
        assert_eq!(pairs, [(1, 14), (2, 13), (3, 12), (4, 11), (5, 10), (6, 9)]);
        let c = verify_hyper_edges(&CdAlgebra::new(4).unwrap(), &k).unwrap();
        assert_eq!((c.edges, c.trios), (12, 4));
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(
            hyper_box_kite(5, 16),
            Err(Error::InvalidSignature { signature: 16 })
        );
        assert_eq!(
            hyper_box_kite(3, 1),
            Err(Error::DimensionOutOfRange { dim_exp: 3, max: 8 })
        );
        let k = hyper_box_kite(5, 15).unwrap();
        assert!(matches!(
            verify_hyper_edges(&CdAlgebra::new(4).unwrap(), &k),
            Err(Error::WrongAlgebra { .. })
        ));
    }
}

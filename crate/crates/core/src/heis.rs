//! The Heisenberg family: central extensions of a symplectic F2-space E by
//! {1, c}, their centralizer character tables, the pairing matrix M on the
//! index set Z, and the closed-form / M-squared / spectrum checks.
//!
//! The bilinear refinement B used to realize the extension has quadratic
//! form q(x) = B(x,x) of Arf invariant 1, so for n = 1 every nonzero vector
//! satisfies x-dot squared = c (the group is the quaternion group). For
//! n >= 2 no refinement can make ALL nonzero vectors do so; chi-sector
//! closed forms are therefore checked at elements with q(x) = 1 and the
//! actual values are reported elsewhere.

use crate::groups::{CentralSubgroup, ClassFunction, FiniteGroup, GroupError};
use crate::mat::Mat;
use crate::pairing::{pair_finite, pairing_matrix, FinitePairingDatum, GramSpace, SigmaPoint};
use crate::report::Reporter;
use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HeisError {
    #[error("n = {0} is out of the supported range 1..=3")]
    SizeLimit(usize),
}

/// The symplectic F2-space E of dimension 2n with the standard form pairing
/// coordinates (0,1), (2,3), ...; vectors are bitmasks.
#[derive(Clone, Copy)]
pub struct SymplecticSpace {
    pub n: usize,
}

impl SymplecticSpace {
    pub fn size(&self) -> u32 {
        1 << (2 * self.n)
    }

    /// Standard symplectic form <x,y> = sum of x_{2k} y_{2k+1} + x_{2k+1} y_{2k}.
    pub fn symp(&self, x: u32, y: u32) -> u32 {
        let mut acc = 0;
        for k in 0..self.n {
            let (a, b) = (2 * k, 2 * k + 1);
            acc ^= ((x >> a) & 1) & ((y >> b) & 1);
            acc ^= ((x >> b) & 1) & ((y >> a) & 1);
        }
        acc
    }

    /// Bilinear refinement with B(x,y) + B(y,x) = <x,y>; its quadratic form
    /// q(x) = B(x,x) has Arf invariant 1.
    pub fn bform(&self, x: u32, y: u32) -> u32 {
        let mut acc = ((x & 1) & (y & 1)) ^ (((x >> 1) & 1) & ((y >> 1) & 1));
        for k in 0..self.n {
            acc ^= ((x >> (2 * k)) & 1) & ((y >> (2 * k + 1)) & 1);
        }
        acc
    }

    pub fn q(&self, x: u32) -> u32 {
        self.bform(x, x)
    }
}

/// The Heisenberg group on F2 x E with product
/// (e, x)(e', x') = (e + e' + B(x, x'), x + x').
pub struct HeisenbergGroup {
    pub space: SymplecticSpace,
    pub group: FiniteGroup,
}

impl HeisenbergGroup {
    pub fn build(n: usize) -> Result<HeisenbergGroup, HeisError> {
        if !(1..=3).contains(&n) {
            return Err(HeisError::SizeLimit(n));
        }
        let space = SymplecticSpace { n };
        let es = space.size() as usize;
        let order = 2 * es;
        let mut mul = vec![0usize; order * order];
        for a in 0..order {
            for b in 0..order {
                let (ea, xa) = ((a / es) as u32, (a % es) as u32);
                let (eb, xb) = ((b / es) as u32, (b % es) as u32);
                let ep = (ea + eb + space.bform(xa, xb)) % 2;
                mul[a * order + b] = (ep as usize) * es + ((xa ^ xb) as usize);
            }
        }
        let w = 2 * n;
        let names = (0..order)
            .map(|a| format!("c^{}*[{:0w$b}]", a / es, a % es))
            .collect();
        let group = FiniteGroup::from_mul_table(mul, Some(names))
            .expect("construction satisfies the group axioms");
        Ok(HeisenbergGroup { space, group })
    }

    pub fn e_size(&self) -> u32 {
        self.space.size()
    }

    /// The chosen lift x-dot = (0, x).
    pub fn lift(&self, x: u32) -> usize {
        x as usize
    }

    /// The alternate lift (1, x) = c * x-dot.
    pub fn lift_other(&self, x: u32) -> usize {
        self.e_size() as usize + x as usize
    }

    /// The central element c = (1, 0).
    pub fn c(&self) -> usize {
        self.e_size() as usize
    }

    pub fn psi(&self, elem: usize) -> u32 {
        (elem as u32) % self.e_size()
    }

    pub fn eps(&self, elem: usize) -> u32 {
        (elem as u32) / self.e_size()
    }

    pub fn lambda(&self) -> CentralSubgroup {
        CentralSubgroup::new(&self.group, vec![self.group.identity(), self.c()])
            .expect("c is central")
    }

    pub fn datum(&self) -> FinitePairingDatum {
        FinitePairingDatum {
            group: self.group.clone(),
            lambda: self.lambda(),
        }
    }
}

/// The index set Z: pairs (x, y-bar) with y-bar in E_x = E / F2 x, ordered
/// by x ascending then by the minimal coset representative ascending.
pub struct ZIndex {
    pub pairs: Vec<(u32, u32)>,
}

impl ZIndex {
    pub fn build(space: &SymplecticSpace) -> ZIndex {
        let size = space.size();
        let mut pairs = Vec::new();
        for x in 0..size {
            for y in 0..size {
                if y.min(y ^ x) == y {
                    pairs.push((x, y));
                }
            }
        }
        ZIndex { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// |E_x| for the x of the given pair.
    pub fn ex_size(space: &SymplecticSpace, x: u32) -> u32 {
        if x == 0 {
            space.size()
        } else {
            space.size() / 2
        }
    }
}

/// Count formula 2^{2n} + (2^{2n} - 1) 2^{2n-1}.
pub fn z_count(n: usize) -> usize {
    let e = 1usize << (2 * n);
    e + (e - 1) * e / 2
}

/// The character families of Z_H(x-dot): the trivial-sector family indexed
/// by E_x (linear, value (-1)^{<psi(.), y>}) and the chi-sector family (one
/// degree-2^n character when x = 0, two of degree 2^{n-1} otherwise).
/// Returned as class functions on the centralizer subgroup, plus its
/// embedding into H.
pub struct SectorCharacters {
    pub centralizer: FiniteGroup,
    pub embedding: Vec<usize>,
    /// (y-bar representative, character) pairs.
    pub i1: Vec<(u32, ClassFunction)>,
    pub ichi: Vec<ClassFunction>,
}

pub fn sector_characters(h: &HeisenbergGroup, x: u32) -> Result<SectorCharacters, GroupError> {
    let s = h.space;
    let (centralizer, embedding) = h.group.centralizer(h.lift(x))?;
    let n = s.n;
    let mut i1 = Vec::new();
    for y in 0..s.size() {
        if y.min(y ^ x) != y {
            continue;
        }
        let values: Vec<Scalar> = embedding
            .iter()
            .map(|&p| {
                if s.symp(h.psi(p), y) == 0 {
                    Scalar::from_int(1)
                } else {
                    Scalar::from_int(-1)
                }
            })
            .collect();
        i1.push((
            y,
            ClassFunction {
                name: format!("sig[{y:b}]"),
                values,
            },
        ));
    }
    let mut ichi = Vec::new();
    if x == 0 {
        let deg = 1i64 << n;
        let values: Vec<Scalar> = embedding
            .iter()
            .map(|&p| {
                if h.psi(p) != 0 {
                    Scalar::zero()
                } else if h.eps(p) == 0 {
                    Scalar::from_int(deg)
                } else {
                    Scalar::from_int(-deg)
                }
            })
            .collect();
        ichi.push(ClassFunction {
            name: "rho".into(),
            values,
        });
    } else {
        // Two characters supported on {1, c, x-dot, c x-dot}; the value s at
        // x-dot satisfies s^2 = (-1)^{q(x)} (2^{n-1})^2, forced by the
        // relation x-dot squared = c^{q(x)} and orthogonality.
        let deg = 1i64 << (n - 1);
        let s_base = if s.q(x) == 1 {
            Scalar::i() * Scalar::from_int(deg)
        } else {
            Scalar::from_int(deg)
        };
        for (tag, sign) in [("rho", 1i64), ("rho'", -1i64)] {
            let sval = s_base.clone() * Scalar::from_int(sign);
            let values: Vec<Scalar> = embedding
                .iter()
                .map(|&p| {
                    let z = h.psi(p);
                    let central_sign = if h.eps(p) == 0 { 1 } else { -1 };
                    if z == 0 {
                        Scalar::from_int(deg * central_sign)
                    } else if z == x {
                        sval.clone() * Scalar::from_int(central_sign)
                    } else {
                        Scalar::zero()
                    }
                })
                .collect();
            ichi.push(ClassFunction {
                name: tag.into(),
                values,
            });
        }
    }
    Ok(SectorCharacters {
        centralizer,
        embedding,
        i1,
        ichi,
    })
}

/// The closed-form pairing value on Z:
/// 0 when <x,x'> != 0, else
/// 2^{-2n+2} (-1)^{<x',y> + <x,y'>} (d_{x,0}+1)^-1 (d_{x',0}+1)^-1.
pub fn closed_form(space: &SymplecticSpace, (x, y): (u32, u32), (xp, yp): (u32, u32)) -> Scalar {
    if space.symp(x, xp) != 0 {
        return Scalar::zero();
    }
    let n = space.n as i64;
    let sign = if (space.symp(xp, y) + space.symp(x, yp)) % 2 == 0 {
        1
    } else {
        -1
    };
    let mut denom = 1i64 << (2 * n - 2);
    if x == 0 {
        denom *= 2;
    }
    if xp == 0 {
        denom *= 2;
    }
    Scalar::from_ratio(sign, denom)
}

/// The trivial-sector SigmaPoints indexed by Z, using the lift (0, x).
pub fn z_points(h: &HeisenbergGroup) -> Vec<SigmaPoint> {
    z_points_with_lift(h, false)
}

pub fn z_points_with_lift(h: &HeisenbergGroup, other_lift: bool) -> Vec<SigmaPoint> {
    let zi = ZIndex::build(&h.space);
    let mut points = Vec::with_capacity(zi.len());
    let mut cached: Option<(u32, SectorCharacters)> = None;
    for &(x, y) in &zi.pairs {
        if cached.as_ref().map(|(cx, _)| *cx) != Some(x) {
            cached = Some((x, sector_characters(h, x).expect("x is in E")));
        }
        let sc = &cached.as_ref().unwrap().1;
        let chr = &sc.i1.iter().find(|(yy, _)| *yy == y).unwrap().1;
        let elem = if other_lift { h.lift_other(x) } else { h.lift(x) };
        points.push(SigmaPoint::from_centralizer_char(
            format!("([{:b}],[{:b}])", x, y),
            elem,
            h.group.order(),
            chr,
            &sc.embedding,
        ));
    }
    points
}

/// The chi-sector SigmaPoints (x, rho).
pub fn chi_points(h: &HeisenbergGroup) -> Vec<SigmaPoint> {
    let mut points = Vec::new();
    for x in 0..h.e_size() {
        let sc = sector_characters(h, x).expect("x is in E");
        for chr in &sc.ichi {
            points.push(SigmaPoint::from_centralizer_char(
                format!("([{:b}],{})", x, chr.name),
                h.lift(x),
                h.group.order(),
                chr,
                &sc.embedding,
            ));
        }
    }
    points
}

/// The trivial-sector pairing matrix M over Z, by brute force.
pub fn matrix_m(h: &HeisenbergGroup) -> (ZIndex, GramSpace) {
    let zi = ZIndex::build(&h.space);
    let d = h.datum();
    let points = z_points(h);
    let labels = points.iter().map(|p| p.label.clone()).collect();
    let mat = pairing_matrix(&d, &points, &points);
    (
        zi,
        GramSpace::new(labels, mat).expect("M is Hermitian"),
    )
}

/// Expected M-squared entry: d_{x,x'} (2 - d_{x,0}) (2 d_{ybar,ybar'} - |E_x|^-1).
pub fn m_squared_expected(space: &SymplecticSpace, zi: &ZIndex) -> Mat<Scalar> {
    Mat::from_fn(zi.len(), zi.len(), |a, b| {
        let (x, y) = zi.pairs[a];
        let (xp, yp) = zi.pairs[b];
        if x != xp {
            return Scalar::zero();
        }
        let factor = if x == 0 { 1 } else { 2 };
        let diag = if y == yp { 2 } else { 0 };
        let ex = ZIndex::ex_size(space, x) as i64;
        Scalar::from_int(factor) * (Scalar::from_int(diag) - Scalar::from_ratio(1, ex))
    })
}

/// Spectral data of M, certified through M-squared: multiplicities of the
/// eigenvalues 1, 2, 4 of M-squared by exact kernel dimensions.
pub struct SpectrumReport {
    pub n: usize,
    pub z_count: usize,
    pub min_poly_ok: bool,
    pub det_nonzero: bool,
    /// (eigenvalue of M-squared, multiplicity)
    pub multiplicities: Vec<(i64, usize)>,
}

impl SpectrumReport {
    /// Display like "(t-1)^1(t-2)^6(t-4)^3".
    pub fn char_poly_string(&self) -> String {
        self.multiplicities
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(r, m)| format!("(t-{r})^{m}"))
            .collect()
    }
}

pub fn spectrum_report(h: &HeisenbergGroup) -> SpectrumReport {
    let (_, gs) = matrix_m(h);
    let m2 = &gs.gram * &gs.gram;
    let min_poly_ok = m2
        .min_poly_divides(&[
            Scalar::from_int(1),
            Scalar::from_int(2),
            Scalar::from_int(4),
        ])
        .expect("square");
    let dim = m2.rows();
    let mut multiplicities = Vec::new();
    let mut total = 0usize;
    for r in [1i64, 2, 4] {
        let shifted = &m2 - &Mat::identity(dim).scale(&Scalar::from_int(r));
        let mult = shifted.kernel_basis().len();
        total += mult;
        multiplicities.push((r, mult));
    }
    assert_eq!(total, dim, "M-squared must be semisimple on {{1,2,4}}");
    let det_nonzero = gs.gram.rank() == dim;
    SpectrumReport {
        n: h.space.n,
        z_count: dim,
        min_poly_ok,
        det_nonzero,
        multiplicities,
    }
}

/// The expected eigenvalue multiplicities of M-squared from the block
/// structure: the x = 0 block contributes 1 once and 2 with multiplicity
/// |E| - 1; each of the |E| - 1 nonzero-x blocks contributes 2 once and 4
/// with multiplicity |E_x| - 1.
pub fn expected_spectrum_string(n: usize) -> String {
    let e = 1usize << (2 * n);
    let ex = e / 2;
    format!(
        "(t-1)^1(t-2)^{}(t-4)^{}",
        (e - 1) + (e - 1),
        (e - 1) * (ex - 1)
    )
}

/// The full check suite for one n: counts, closed forms, M-squared, the
/// spectrum, character tables, and the mixed / chi-sector values.
pub fn heis_report(n: usize) -> Result<Reporter, HeisError> {
    let h = HeisenbergGroup::build(n)?;
    let mut r = Reporter::new();
    let (zi, gs) = matrix_m(&h);
    r.check_eq(format!("heis{n}.z-count"), z_count(n), zi.len());
    r.check(format!("heis{n}.closed-form"), "all entries match", || {
        let mut bad = 0usize;
        for a in 0..zi.len() {
            for b in 0..zi.len() {
                if *gs.gram.at(a, b) != closed_form(&h.space, zi.pairs[a], zi.pairs[b]) {
                    bad += 1;
                }
            }
        }
        (
            bad == 0,
            if bad == 0 {
                "all entries match".into()
            } else {
                format!("{bad} mismatches")
            },
        )
    });
    let m2 = &gs.gram * &gs.gram;
    r.check(format!("heis{n}.m-squared-blocks"), "matches the block formula", || {
        let ok = m2 == m_squared_expected(&h.space, &zi);
        (ok, if ok { "matches the block formula".into() } else { "differs".into() })
    });
    let spec = spectrum_report(&h);
    r.check_eq(format!("heis{n}.min-poly-divides-124"), true, spec.min_poly_ok);
    r.check_eq(format!("heis{n}.det-nonzero"), true, spec.det_nonzero);
    r.check_eq(
        format!("heis{n}.spectrum"),
        expected_spectrum_string(n),
        spec.char_poly_string(),
    );
    r.check(format!("heis{n}.character-tables"), "orthogonal and complete", || {
        let mut problems = Vec::new();
        for x in 0..h.e_size() {
            let sc = match sector_characters(&h, x) {
                Ok(sc) => sc,
                Err(e) => {
                    problems.push(format!("x={x}: {e}"));
                    continue;
                }
            };
            let mut all: Vec<ClassFunction> = sc.i1.iter().map(|(_, c)| c.clone()).collect();
            all.extend(sc.ichi.iter().cloned());
            problems.extend(crate::groups::validate_characters(&sc.centralizer, &all));
        }
        (
            problems.is_empty(),
            if problems.is_empty() {
                "orthogonal and complete".into()
            } else {
                problems.join("; ")
            },
        )
    });
    let d = h.datum();
    let zp = z_points(&h);
    let cp = chi_points(&h);
    r.check(format!("heis{n}.mixed-sector"), "closed form holds", || {
        let mut bad = 0usize;
        for (a, p) in zp.iter().enumerate() {
            let (x, y) = zi.pairs[a];
            for q in &cp {
                let v = pair_finite(&d, p, q);
                let xp = h.psi(q.elem);
                let expect = if x != 0 {
                    Scalar::zero()
                } else {
                    // ((1, y-bar), (x'-dot, rho_1)) = 2^{-n} (-1)^{<x',y>}.
                    let sign = if h.space.symp(xp, y) == 0 { 1 } else { -1 };
                    Scalar::from_ratio(sign, 1 << n)
                };
                if v != expect {
                    bad += 1;
                }
            }
        }
        (
            bad == 0,
            if bad == 0 { "closed form holds".into() } else { format!("{bad} mismatches") },
        )
    });
    r.check(format!("heis{n}.chi-sector"), "closed form holds at q(x) = 1", || {
        let mut bad = 0usize;
        for p in &cp {
            let x = h.psi(p.elem);
            if x != 0 && h.space.q(x) != 1 {
                continue;
            }
            for q in &cp {
                let xp = h.psi(q.elem);
                if xp != 0 && h.space.q(xp) != 1 {
                    continue;
                }
                let v = pair_finite(&d, p, q);
                // With the common lift (0, x): 0 for x != x', else +1 for
                // equal characters and -1 for distinct ones.
                let expect = if x != xp {
                    Scalar::zero()
                } else if p.label == q.label {
                    Scalar::from_int(1)
                } else {
                    Scalar::from_int(-1)
                };
                if v != expect {
                    bad += 1;
                }
            }
        }
        (
            bad == 0,
            if bad == 0 {
                "closed form holds at q(x) = 1".into()
            } else {
                format!("{bad} mismatches")
            },
        )
    });
    Ok(r)
}

/// Hermitian symmetry and central-translate equivariance of the pairing on
/// the union of the trivial- and chi-sector points: exhaustive when
/// `samples` is None, otherwise on that many sampled (p, q, zeta, zeta')
/// tuples.
pub fn symmetry_report(n: usize, samples: Option<usize>, seed: u64) -> Result<Reporter, HeisError> {
    let h = HeisenbergGroup::build(n)?;
    let d = h.datum();
    let mut points = z_points(&h);
    points.extend(chi_points(&h));
    let sectors: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| p.sector(&d).expect("sector characters are consistent"))
        .collect();
    let zetas = d.lambda.elements.clone();
    let tuples: Vec<(usize, usize, usize, usize)> = match samples {
        None => {
            let mut all = Vec::new();
            for i in 0..points.len() {
                for j in 0..points.len() {
                    for zi in 0..zetas.len() {
                        for zj in 0..zetas.len() {
                            all.push((i, j, zi, zj));
                        }
                    }
                }
            }
            all
        }
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    (
                        rng.gen_range(0..points.len()),
                        rng.gen_range(0..points.len()),
                        rng.gen_range(0..zetas.len()),
                        rng.gen_range(0..zetas.len()),
                    )
                })
                .collect()
        }
    };
    let mut r = Reporter::new();
    let mode = if samples.is_none() {
        "exhaustive".to_string()
    } else {
        format!("{} sampled tuples", tuples.len())
    };
    r.check(format!("heis{n}.hermitian-symmetry"), format!("holds ({mode})"), || {
        let mut bad = 0usize;
        for &(i, j, _, _) in &tuples {
            if pair_finite(&d, &points[j], &points[i]) != pair_finite(&d, &points[i], &points[j]).conj() {
                bad += 1;
            }
        }
        (
            bad == 0,
            if bad == 0 { format!("holds ({mode})") } else { format!("{bad} violations") },
        )
    });
    r.check(format!("heis{n}.equivariance"), format!("holds ({mode})"), || {
        let mut bad = 0usize;
        for &(i, j, zi, zj) in &tuples {
            let p = &points[i];
            let q = &points[j];
            let base = pair_finite(&d, p, q);
            let tp = p.translate(&d, zetas[zi]);
            let tq = q.translate(&d, zetas[zj]);
            let lhs = pair_finite(&d, &tp, &tq);
            let rhs = sectors[i][zj].clone() * sectors[j][zi].conj() * base;
            if lhs != rhs {
                bad += 1;
            }
        }
        (
            bad == 0,
            if bad == 0 { format!("holds ({mode})") } else { format!("{bad} violations") },
        )
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_reports_pass() {
        let r = heis_report(1).unwrap();
        assert!(r.all_passed(), "{:?}", r.checks.iter().filter(|c| !c.passed()).map(|c| &c.name).collect::<Vec<_>>());
        let s = symmetry_report(1, None, 0xC4A7).unwrap();
        assert!(s.all_passed());
    }

    #[test]
    fn n1_is_quaternion_like() {
        let h = HeisenbergGroup::build(1).unwrap();
        assert_eq!(h.group.order(), 8);
        // Exactly one involution (c); all six non-central elements have order 4.
        let invs = (0..8).filter(|&a| h.group.element_order(a) == 2).count();
        assert_eq!(invs, 1);
        assert_eq!(h.group.center_elements(), vec![h.group.identity(), h.c()]);
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert!(matches!(
            HeisenbergGroup::build(0),
            Err(HeisError::SizeLimit(0))
        ));
        assert!(matches!(
            HeisenbergGroup::build(4),
            Err(HeisError::SizeLimit(4))
        ));
    }

    #[test]
    fn commutation_and_square_laws() {
        for n in 1..=2 {
            let h = HeisenbergGroup::build(n).unwrap();
            let s = h.space;
            for x in 0..h.e_size() {
                // x-dot squared = c^{q(x)}
                let sq = h.group.mul(h.lift(x), h.lift(x));
                let expect = if s.q(x) == 1 { h.c() } else { h.group.identity() };
                assert_eq!(sq, expect);
                for y in 0..h.e_size() {
                    // x-dot y-dot = c^{<x,y>} y-dot x-dot
                    let lhs = h.group.mul(h.lift(x), h.lift(y));
                    let mut rhs = h.group.mul(h.lift(y), h.lift(x));
                    if s.symp(x, y) == 1 {
                        rhs = h.group.mul(h.c(), rhs);
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn n1_quadratic_form_is_one_on_nonzero() {
        let h = HeisenbergGroup::build(1).unwrap();
        for x in 1..4 {
            assert_eq!(h.space.q(x), 1);
        }
    }

    #[test]
    fn n1_conjugacy_classes() {
        let h = HeisenbergGroup::build(1).unwrap();
        let classes = h.group.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn z_counts() {
        assert_eq!(z_count(1), 10);
        assert_eq!(z_count(2), 136);
        let s1 = SymplecticSpace { n: 1 };
        assert_eq!(ZIndex::build(&s1).len(), 10);
        let s2 = SymplecticSpace { n: 2 };
        assert_eq!(ZIndex::build(&s2).len(), 136);
    }

    #[test]
    fn character_tables_are_orthogonal_and_complete() {
        for n in 1..=2 {
            let h = HeisenbergGroup::build(n).unwrap();
            for x in 0..h.e_size() {
                let sc = sector_characters(&h, x).unwrap();
                let mut all: Vec<ClassFunction> =
                    sc.i1.iter().map(|(_, c)| c.clone()).collect();
                all.extend(sc.ichi.iter().cloned());
                let bad = crate::groups::validate_characters(&sc.centralizer, &all);
                assert!(bad.is_empty(), "x={x}: {bad:?}");
            }
        }
    }

    #[test]
    fn n1_matrix_equals_closed_form() {
        let h = HeisenbergGroup::build(1).unwrap();
        let (zi, gs) = matrix_m(&h);
        for a in 0..zi.len() {
            for b in 0..zi.len() {
                assert_eq!(
                    *gs.gram.at(a, b),
                    closed_form(&h.space, zi.pairs[a], zi.pairs[b]),
                    "entry ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn n1_m_squared_and_spectrum() {
        let h = HeisenbergGroup::build(1).unwrap();
        let (zi, gs) = matrix_m(&h);
        let m2 = &gs.gram * &gs.gram;
        assert_eq!(m2, m_squared_expected(&h.space, &zi));
        let report = spectrum_report(&h);
        assert!(report.min_poly_ok);
        assert!(report.det_nonzero);
        assert_eq!(report.char_poly_string(), "(t-1)^1(t-2)^6(t-4)^3");
        // Cross-check the multiplicities against a direct characteristic
        // polynomial at this small size.
        let p = m2.char_poly().unwrap();
        let (factors, rest) = p.factor_at_roots(&[
            Scalar::from_int(1),
            Scalar::from_int(2),
            Scalar::from_int(4),
        ]);
        assert_eq!(rest.degree(), Some(0));
        let mults: Vec<(i64, usize)> = factors
            .iter()
            .map(|(_, m)| *m)
            .zip([1i64, 2, 4])
            .map(|(m, r)| (r, m))
            .collect();
        assert_eq!(mults, report.multiplicities);
    }

    #[test]
    fn n1_lift_independence() {
        let h = HeisenbergGroup::build(1).unwrap();
        let d = h.datum();
        let p0 = z_points(&h);
        let p1 = z_points_with_lift(&h, true);
        for i in 0..p0.len() {
            for j in 0..p0.len() {
                assert_eq!(
                    pair_finite(&d, &p0[i], &p0[j]),
                    pair_finite(&d, &p1[i], &p1[j])
                );
            }
        }
    }

    #[test]
    fn n1_mixed_sector_values() {
        let h = HeisenbergGroup::build(1).unwrap();
        let d = h.datum();
        let zp = z_points(&h);
        let cp = chi_points(&h);
        let zi = ZIndex::build(&h.space);
        for (a, p) in zp.iter().enumerate() {
            let (x, _y) = zi.pairs[a];
            for q in &cp {
                let v = pair_finite(&d, p, q);
                let xp = h.psi(q.elem);
                if x != 0 {
                    assert!(v.is_zero(), "x={x} expected 0 got {v}");
                } else if h.space.q(xp) == 1 || xp == 0 {
                    // 2^{-n} (-1)^{<x',y>} up to the rho/rho' sign
                    let mag = v.clone() * v.clone();
                    let expect = Scalar::from_ratio(1, 4);
                    assert_eq!(mag, expect, "x'={xp} value {v}");
                }
            }
        }
    }
}

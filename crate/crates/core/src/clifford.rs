//! Exact Clifford-algebra arithmetic over the scalar field: sparse elements
//! in the monomial basis of C(V) for an orthonormal basis of V, the
//! conjugation map beta to orthogonal transformations, the spin-family
//! generators y~_i and x_{i;e,f} attached to a multiplicity datum, the
//! finite 2-group they generate, and the simply-connectedness predicates
//! together with the static exceptional-orbit table.

use crate::report::Reporter;
use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Hard cap on dim V: the monomial basis has 2^N elements.
pub const MAX_N: u32 = 14;

#[derive(Debug, thiserror::Error)]
pub enum CliffordError {
    #[error("elements belong to algebras of different dimension ({0} vs {1})")]
    AlgebraMismatch(u32, u32),
    #[error("element does not lie in V: {0}")]
    NotInV(String),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("relation failure: {0}")]
    RelationFailure(String),
    #[error("unknown exceptional label: {0}")]
    UnknownLabel(String),
    #[error("dimension {0} exceeds the limit {MAX_N}")]
    SizeLimit(u32),
    #[error("bad datum: {0}")]
    BadDatum(String),
}

/// A sparse element of C(V), dim V = n: subset bitmask -> coefficient, with
/// e_i^2 = 1 and e_i e_j = -e_j e_i for the fixed orthonormal basis.
#[derive(Clone, PartialEq)]
pub struct CliffordElement {
    pub n: u32,
    terms: BTreeMap<u32, Scalar>,
}

impl CliffordElement {
    pub fn zero(n: u32) -> Self {
        CliffordElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: u32, c: Scalar) -> Self {
        let mut el = CliffordElement::zero(n);
        el.add_term(0, c);
        el
    }

    pub fn one(n: u32) -> Self {
        CliffordElement::scalar(n, Scalar::from_int(1))
    }

    /// The vector with the given coordinates, viewed inside the algebra.
    pub fn vector(coords: &[Scalar]) -> Self {
        let mut el = CliffordElement::zero(coords.len() as u32);
        for (k, c) in coords.iter().enumerate() {
            el.add_term(1 << k, c.clone());
        }
        el
    }

    pub fn monomial(n: u32, subset: u32, c: Scalar) -> Self {
        let mut el = CliffordElement::zero(n);
        el.add_term(subset, c);
        el
    }

    fn add_term(&mut self, subset: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(subset).or_insert_with(Scalar::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&subset);
        }
    }

    pub fn terms(&self) -> &BTreeMap<u32, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|&s| s == 0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = CliffordElement::zero(self.n);
        for (&s, v) in &self.terms {
            out.add_term(s, v.clone() * c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CliffordError> {
        if self.n != rhs.n {
            return Err(CliffordError::AlgebraMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (&s, v) in &rhs.terms {
            out.add_term(s, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, CliffordError> {
        self.add(&rhs.neg())
    }

    /// Exact product: fold e_S * e_t = (-1)^{#{s in S: s > t}} e_{S xor {t}}
    /// over the generators of the right factor's monomials.
    pub fn mul(&self, rhs: &Self) -> Result<Self, CliffordError> {
        if self.n != rhs.n {
            return Err(CliffordError::AlgebraMismatch(self.n, rhs.n));
        }
        let mut out = CliffordElement::zero(self.n);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                let mut subset = a;
                let mut sign_flips = 0u32;
                for t in 0..self.n {
                    if b & (1 << t) == 0 {
                        continue;
                    }
                    // Count generators already present above position t.
                    sign_flips += (subset >> (t + 1)).count_ones();
                    subset ^= 1 << t;
                }
                let mut c = ca.clone() * cb.clone();
                if sign_flips % 2 == 1 {
                    c = -c;
                }
                out.add_term(subset, c);
            }
        }
        Ok(out)
    }

    /// The coordinates of an element of V, if it is one.
    pub fn vector_part(&self) -> Result<Vec<Scalar>, CliffordError> {
        let mut coords = vec![Scalar::zero(); self.n as usize];
        for (&s, v) in &self.terms {
            if s.count_ones() != 1 {
                return Err(CliffordError::NotInV(format!(
                    "monomial of degree {} present",
                    s.count_ones()
                )));
            }
            coords[s.trailing_zeros() as usize] = v.clone();
        }
        Ok(coords)
    }
}

impl std::fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&s, c)| {
                if s == 0 {
                    format!("({c})")
                } else {
                    let gens: Vec<String> =
                        (0..self.n).filter(|t| s & (1 << t) != 0).map(|t| format!("e{}", t + 1)).collect();
                    format!("({c})*{}", gens.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// The reflection r_w(v) = v - 2(v,w)w for a unit vector w.
fn reflect(w: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let c = dot(v, w) * Scalar::from_int(2);
    v.iter()
        .zip(w)
        .map(|(vi, wi)| vi.clone() - c.clone() * wi.clone())
        .collect()
}

fn product_of_vectors(n: u32, vectors: &[Vec<Scalar>]) -> Result<CliffordElement, CliffordError> {
    let mut acc = CliffordElement::one(n);
    for v in vectors {
        acc = acc.mul(&CliffordElement::vector(v))?;
    }
    Ok(acc)
}

/// Conjugation by a product xi = v_1...v_n of unit vectors: computes
/// xi v xi^{-1} inside the algebra, asserts the result lies in V, and
/// asserts it equals (-1)^n r_{v_1}(r_{v_2}(...r_{v_n}(v)...)).
pub fn beta(
    n: u32,
    unit_vectors: &[Vec<Scalar>],
    v: &[Scalar],
) -> Result<Vec<Scalar>, CliffordError> {
    for (k, w) in unit_vectors.iter().enumerate() {
        if dot(w, w) != Scalar::from_int(1) {
            return Err(CliffordError::BadIndex(format!(
                "factor {k} is not a unit vector"
            )));
        }
    }
    let xi = product_of_vectors(n, unit_vectors)?;
    // Each factor is a unit vector, so the reversed product is the inverse.
    let rev: Vec<Vec<Scalar>> = unit_vectors.iter().rev().cloned().collect();
    let xi_inv = product_of_vectors(n, &rev)?;
    let conj = xi.mul(&CliffordElement::vector(v))?.mul(&xi_inv)?;
    let algebra_result = conj.vector_part()?;
    // The innermost reflection is the last factor of the product.
    let mut expect = v.to_vec();
    for w in unit_vectors.iter().rev() {
        expect = reflect(w, &expect);
    }
    if unit_vectors.len() % 2 == 1 {
        expect = expect.iter().map(|c| -c.clone()).collect();
    }
    if algebra_result != expect {
        return Err(CliffordError::RelationFailure(
            "algebra conjugation disagrees with the composed-reflection formula".into(),
        ));
    }
    Ok(algebra_result)
}

/// Conjugation g v g^{-1} of every basis vector by an arbitrary invertible
/// element given with its inverse; returns the matrix columns as vectors.
fn conjugation_columns(
    g: &CliffordElement,
    g_inv: &CliffordElement,
) -> Result<Vec<Vec<Scalar>>, CliffordError> {
    let n = g.n;
    let mut cols = Vec::with_capacity(n as usize);
    for k in 0..n {
        let ek = CliffordElement::monomial(n, 1 << k, Scalar::from_int(1));
        let out = g.mul(&ek)?.mul(g_inv)?;
        cols.push(out.vector_part()?);
    }
    Ok(cols)
}

// ---- spin data ----------------------------------------------------------

/// The multiplicity datum i -> m_i describing V = (+) W_i tensor E_i with
/// dim W_i = i and dim E_i = m_i, all bases orthonormal. Coordinates are
/// laid out block by block in increasing i, within a block as (w^j, eps^k)
/// with the W index varying fastest.
#[derive(Clone, Debug)]
pub struct SpinDatum {
    pub multiplicities: BTreeMap<u32, u32>,
}

impl SpinDatum {
    pub fn new(multiplicities: BTreeMap<u32, u32>) -> Result<SpinDatum, CliffordError> {
        let multiplicities: BTreeMap<u32, u32> = multiplicities
            .into_iter()
            .filter(|&(_, m)| m > 0)
            .collect();
        if multiplicities.is_empty() {
            return Err(CliffordError::BadDatum("empty multiplicity map".into()));
        }
        let d = SpinDatum { multiplicities };
        if d.n() > MAX_N {
            return Err(CliffordError::SizeLimit(d.n()));
        }
        Ok(d)
    }

    /// Parse the comma-separated "i:m_i" format.
    pub fn parse(s: &str) -> Result<SpinDatum, CliffordError> {
        let mut map = BTreeMap::new();
        for part in s.split(',') {
            let (i, m) = part
                .split_once(':')
                .ok_or_else(|| CliffordError::BadDatum(format!("bad entry {part:?}")))?;
            let i: u32 = i
                .trim()
                .parse()
                .map_err(|_| CliffordError::BadDatum(format!("bad index in {part:?}")))?;
            let m: u32 = m
                .trim()
                .parse()
                .map_err(|_| CliffordError::BadDatum(format!("bad multiplicity in {part:?}")))?;
            if i == 0 {
                return Err(CliffordError::BadDatum("index 0 not allowed".into()));
            }
            map.insert(i, m);
        }
        SpinDatum::new(map)
    }

    pub fn n(&self) -> u32 {
        self.multiplicities.iter().map(|(&i, &m)| i * m).sum()
    }

    pub fn i_odd(&self) -> Vec<u32> {
        self.multiplicities
            .keys()
            .copied()
            .filter(|i| i % 2 == 1)
            .collect()
    }

    pub fn i_even(&self) -> Vec<u32> {
        self.multiplicities
            .keys()
            .copied()
            .filter(|i| i % 2 == 0)
            .collect()
    }

    fn block_offset(&self, i: u32) -> Result<u32, CliffordError> {
        if !self.multiplicities.contains_key(&i) {
            return Err(CliffordError::BadIndex(format!("no block with i = {i}")));
        }
        Ok(self
            .multiplicities
            .iter()
            .take_while(|&(&j, _)| j < i)
            .map(|(&j, &m)| j * m)
            .sum())
    }

    /// The coordinate of w^j_i tensor eps^k_i (0-based j < i, k < m_i).
    pub fn coord(&self, i: u32, j: u32, k: u32) -> Result<u32, CliffordError> {
        let m = *self
            .multiplicities
            .get(&i)
            .ok_or_else(|| CliffordError::BadIndex(format!("no block with i = {i}")))?;
        if j >= i || k >= m {
            return Err(CliffordError::BadIndex(format!(
                "(j, k) = ({j}, {k}) out of range for block {i}"
            )));
        }
        Ok(self.block_offset(i)? + k * i + j)
    }

    /// The V-coordinates of w^j_i tensor e for e in E_i given by its
    /// coefficients over the orthonormal basis of E_i.
    pub fn w_tensor(&self, i: u32, j: u32, e: &[Scalar]) -> Result<Vec<Scalar>, CliffordError> {
        let m = *self
            .multiplicities
            .get(&i)
            .ok_or_else(|| CliffordError::BadIndex(format!("no block with i = {i}")))?;
        if e.len() != m as usize {
            return Err(CliffordError::BadIndex(format!(
                "E_{i} coefficient vector has length {}, expected {m}",
                e.len()
            )));
        }
        let mut v = vec![Scalar::zero(); self.n() as usize];
        for (k, c) in e.iter().enumerate() {
            v[self.coord(i, j, k as u32)? as usize] = c.clone();
        }
        Ok(v)
    }

    /// The chosen unit vector e_i of E_i: the first basis vector.
    pub fn e_unit(&self, i: u32) -> Result<Vec<Scalar>, CliffordError> {
        let m = *self
            .multiplicities
            .get(&i)
            .ok_or_else(|| CliffordError::BadIndex(format!("no block with i = {i}")))?;
        let mut e = vec![Scalar::zero(); m as usize];
        e[0] = Scalar::from_int(1);
        Ok(e)
    }

    /// The factor list (w^1_i tensor e) ... (w^i_i tensor e).
    fn y_factors(&self, i: u32, e: &[Scalar]) -> Result<Vec<Vec<Scalar>>, CliffordError> {
        (0..i).map(|j| self.w_tensor(i, j, e)).collect()
    }

    /// y~_i(e) = (w^1_i tensor e)...(w^i_i tensor e); the default generator
    /// uses e = e_i.
    pub fn y_tilde_at(&self, i: u32, e: &[Scalar]) -> Result<CliffordElement, CliffordError> {
        if i % 2 == 0 {
            return Err(CliffordError::BadIndex(format!("i = {i} is not odd")));
        }
        if dot(e, e) != Scalar::from_int(1) {
            return Err(CliffordError::BadIndex("e is not a unit vector".into()));
        }
        product_of_vectors(self.n(), &self.y_factors(i, e)?)
    }

    pub fn y_tilde(&self, i: u32) -> Result<CliffordElement, CliffordError> {
        self.y_tilde_at(i, &self.e_unit(i)?)
    }

    /// x_{i;e,f} = y~_i(e) y~_i(f). For orthogonal unit vectors e, f this is
    /// antisymmetric: x_{i;e,f} = -x_{i;f,e} (2i distinct anticommuting
    /// factors, i odd); for non-orthogonal pairs a symmetric lower-degree
    /// term proportional to (e, f) appears instead.
    pub fn x(&self, i: u32, e: &[Scalar], f: &[Scalar]) -> Result<CliffordElement, CliffordError> {
        self.y_tilde_at(i, e)?.mul(&self.y_tilde_at(i, f)?)
    }

    /// The orthogonal map y_i = beta(y~_i): identity on W_i tensor C e_i,
    /// minus identity on its perpendicular in V.
    pub fn y_map(&self, i: u32, v: &[Scalar]) -> Result<Vec<Scalar>, CliffordError> {
        let mut out: Vec<Scalar> = v.iter().map(|c| -c.clone()).collect();
        for j in 0..i {
            let idx = self.coord(i, j, 0)? as usize;
            out[idx] = v[idx].clone();
        }
        Ok(out)
    }
}

// ---- suites -------------------------------------------------------------

/// A deterministic rational unit vector: a Pythagorean pair placed at two
/// random coordinates (or a signed basis vector when dim = 1).
pub fn random_unit_vector(dim: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    if dim == 1 {
        v[0] = Scalar::from_int(if rng.gen::<bool>() { 1 } else { -1 });
        return v;
    }
    let a: i64 = rng.gen_range(1..6);
    let b: i64 = rng.gen_range(0..6);
    let (p, q, h) = (a * a - b * b, 2 * a * b, a * a + b * b);
    let mut idx: Vec<usize> = (0..dim).collect();
    for k in (1..dim).rev() {
        idx.swap(k, rng.gen_range(0..=k));
    }
    v[idx[0]] = Scalar::from_ratio(p, h);
    v[idx[1]] = Scalar::from_ratio(q, h);
    v
}

/// The reflection-formula suite: `count` random pairs (xi, v) with xi a
/// product of up to three unit vectors in dimension up to `max_n`.
pub fn beta_suite(max_n: u32, count: usize, seed: u64) -> Reporter {
    let mut r = Reporter::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    for _ in 0..count {
        let n = rng.gen_range(2..=max_n);
        let factors = rng.gen_range(1..=3usize);
        let xi: Vec<Vec<Scalar>> = (0..factors)
            .map(|_| random_unit_vector(n as usize, &mut rng))
            .collect();
        let v: Vec<Scalar> = (0..n)
            .map(|_| Scalar::from_int(rng.gen_range(-3..=3)))
            .collect();
        if beta(n, &xi, &v).is_err() {
            failures += 1;
        }
    }
    r.check_eq(
        format!("clifford.beta.random-{count}"),
        "0 failures".to_string(),
        format!("{failures} failures"),
    );
    r
}

/// The Delta relations and the generated-group order 2^{|I_odd| + 1}.
pub fn delta_check(d: &SpinDatum) -> Result<Reporter, CliffordError> {
    let mut r = Reporter::new();
    let n = d.n();
    let i_odd = d.i_odd();
    if i_odd.is_empty() {
        return Err(CliffordError::BadDatum("I_odd is empty".into()));
    }
    let c = CliffordElement::scalar(n, Scalar::from_int(-1));
    let one = CliffordElement::one(n);
    let y: BTreeMap<u32, CliffordElement> = i_odd
        .iter()
        .map(|&i| Ok((i, d.y_tilde(i)?)))
        .collect::<Result<_, CliffordError>>()?;
    r.check("delta.c-squared", "1", || {
        let ok = c.mul(&c).map(|p| p == one).unwrap_or(false);
        (ok, if ok { "1".into() } else { "not 1".into() })
    });
    for (&i, yi) in &y {
        let sq = yi.mul(yi)?;
        let expect = if (i * (i - 1) / 2) % 2 == 0 {
            one.clone()
        } else {
            c.clone()
        };
        r.check_eq(
            format!("delta.y{i}-squared"),
            format!("{:?}", expect),
            format!("{:?}", sq),
        );
        let cy = c.mul(yi)?;
        let yc = yi.mul(&c)?;
        r.check(format!("delta.c-central-y{i}"), "commutes", || {
            let ok = cy == yc;
            (ok, if ok { "commutes".into() } else { "fails".into() })
        });
    }
    for (&i, yi) in &y {
        for (&ip, yip) in &y {
            if i >= ip {
                continue;
            }
            let lhs = yi.mul(yip)?;
            let rhs = c.mul(&yip.mul(yi)?)?;
            r.check(format!("delta.anticommute-y{i}-y{ip}"), "z z' = c z' z", || {
                let ok = lhs == rhs;
                (ok, if ok { "z z' = c z' z".into() } else { "fails".into() })
            });
        }
    }
    // Closure enumeration: all generators are signed monomials, so this
    // terminates quickly.
    let mut gens: Vec<CliffordElement> = vec![c.clone()];
    gens.extend(y.values().cloned());
    let mut elements: Vec<CliffordElement> = vec![one.clone()];
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for el in &frontier {
            for g in &gens {
                let prod = el.mul(g)?;
                if !elements.contains(&prod) {
                    elements.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    let expected_order = 1usize << (i_odd.len() + 1);
    r.check_eq(
        "delta.generated-order",
        expected_order.to_string(),
        elements.len().to_string(),
    );
    Ok(r)
}

/// Conjugation-action checks for a block i in I_odd with unit vectors e, f
/// of E_i, plus the kernel-containment generator check.
pub fn conj_action_check(
    d: &SpinDatum,
    i: u32,
    e: &[Scalar],
    f: &[Scalar],
) -> Result<Reporter, CliffordError> {
    let mut r = Reporter::new();
    let n = d.n();
    let m = *d
        .multiplicities
        .get(&i)
        .ok_or_else(|| CliffordError::BadIndex(format!("no block with i = {i}")))?;
    let yi = d.y_tilde(i)?;
    // y~_i is a product of unit vectors, so its reversed product inverts it.
    let e_i = d.e_unit(i)?;
    let factors = d.y_factors(i, &e_i)?;
    let rev: Vec<Vec<Scalar>> = factors.iter().rev().cloned().collect();
    let yi_inv = product_of_vectors(n, &rev)?;
    if m == 1 {
        // E_i is a line: y~_i must commute with x_{i;e_i,e_i} = y~_i^2.
        let x = d.x(i, &e_i, &e_i)?;
        r.check(format!("conj.m1-commutes-i{i}"), "commutes", || {
            let ok = yi
                .mul(&x)
                .and_then(|a| x.mul(&yi).map(|b| a == b))
                .unwrap_or(false);
            (ok, if ok { "commutes".into() } else { "fails".into() })
        });
    } else {
        let x = d.x(i, e, f)?;
        let x_inv = d.y_tilde_at(i, f)?.mul(&d.y_tilde_at(i, e)?)?;
        // x (y~(f) y~(e)) = y~(e) y~(f) y~(f) y~(e) = y~(e) (+-1) y~(e) = +-1;
        // normalize so the product is exactly 1.
        let prod = x.mul(&x_inv)?;
        let x_inv = if prod == CliffordElement::one(n) {
            x_inv
        } else {
            x_inv.neg()
        };
        // beta-level equality: conjugation by y~ x y~^{-1} equals
        // y_i composed with conjugation by x composed with y_i.
        let g = yi.mul(&x)?.mul(&yi_inv)?;
        let g_inv = yi.mul(&x_inv)?.mul(&yi_inv)?;
        let lhs_cols = conjugation_columns(&g, &g_inv)?;
        let mut ok = true;
        for k in 0..n {
            let mut basis = vec![Scalar::zero(); n as usize];
            basis[k as usize] = Scalar::from_int(1);
            let inner = d.y_map(i, &basis)?;
            let mid = CliffordElement::vector(&inner);
            let conj_mid = x.mul(&mid)?.mul(&x_inv)?.vector_part()?;
            let rhs = d.y_map(i, &conj_mid)?;
            if lhs_cols[k as usize] != rhs {
                ok = false;
            }
        }
        r.check(format!("conj.beta-level-i{i}"), "maps agree", || {
            (ok, if ok { "maps agree".into() } else { "differ".into() })
        });
        // Empirical sign: y~ x_{i;e,f} y~^{-1} = s * x_{i;e',f'} where
        // e' = 2(e, e_i) e_i - e (and likewise f').
        let twist = |v: &[Scalar]| -> Vec<Scalar> {
            let c = dot(v, &e_i) * Scalar::from_int(2);
            v.iter()
                .zip(&e_i)
                .map(|(vi, ei)| c.clone() * ei.clone() - vi.clone())
                .collect()
        };
        let target = d.x(i, &twist(e), &twist(f))?;
        let sign = if g == target {
            Some("+")
        } else if g == target.neg() {
            Some("-")
        } else {
            None
        };
        match sign {
            Some(s) => r.check_eq(format!("conj.sign-i{i}"), format!("+-1 (got {s})"), format!("+-1 (got {s})")),
            None => {
                return Err(CliffordError::RelationFailure(
                    "conjugate is not +-x_{i;e',f'}".into(),
                ))
            }
        }
    }
    // Kernel containment: each generator of A is a pair c'_i c'_{i'}; its
    // image is (-1)(-1) = 1 in C(V).
    let c = CliffordElement::scalar(n, Scalar::from_int(-1));
    r.check("conj.kernel-generators", "1", || {
        let ok = c.mul(&c).map(|p| p == CliffordElement::one(n)).unwrap_or(false);
        (ok, if ok { "1".into() } else { "not 1".into() })
    });
    Ok(r)
}

/// The full Appendix-A check suite: the reflection formula on random pairs,
/// the y~ squares and anticommutation, the generated-group orders, the
/// conjugation-action and kernel checks, the simply-connectedness truth
/// table, and the exceptional rows.
pub fn clifford_report(seed: u64) -> Reporter {
    let mut r = Reporter::new();
    r.extend(beta_suite(8, 200, seed));
    r.check("clifford.y-tilde-squares", "y1^2 = 1, y3^2 = -1", || {
        let check = || -> Result<bool, CliffordError> {
            let d = SpinDatum::parse("1:1,3:1")?;
            let y1 = d.y_tilde(1)?;
            let y3 = d.y_tilde(3)?;
            Ok(y1.mul(&y1)? == CliffordElement::one(4)
                && y3.mul(&y3)? == CliffordElement::scalar(4, Scalar::from_int(-1)))
        };
        match check() {
            Ok(true) => (true, "y1^2 = 1, y3^2 = -1".into()),
            Ok(false) => (false, "square values differ".into()),
            Err(e) => (false, e.to_string()),
        }
    });
    r.check("clifford.x-antisymmetry", "x_{e,f} = -x_{f,e} for orthogonal e, f", || {
        let check = || -> Result<bool, CliffordError> {
            let d = SpinDatum::parse("1:2")?;
            let e = vec![Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5)];
            let f = vec![Scalar::from_ratio(-4, 5), Scalar::from_ratio(3, 5)];
            let xef = d.x(1, &e, &f)?;
            let xfe = d.x(1, &f, &e)?;
            Ok(xef == xfe.neg() && xef.mul(&xfe)? == xef.mul(&xef)?.neg())
        };
        match check() {
            Ok(true) => (true, "x_{e,f} = -x_{f,e} for orthogonal e, f".into()),
            Ok(false) => (false, "antisymmetry fails".into()),
            Err(e) => (false, e.to_string()),
        }
    });
    for spec in ["1:1", "1:1,3:1", "1:1,3:1,5:1"] {
        match SpinDatum::parse(spec).and_then(|d| delta_check(&d)) {
            Ok(sub) => r.extend(sub),
            Err(e) => r.check(format!("delta.{spec}"), "runs", move || (false, e.to_string())),
        }
    }
    let conj_cases: Vec<(&str, u32, Vec<Scalar>, Vec<Scalar>)> = vec![
        (
            "1:1",
            1,
            vec![Scalar::from_int(1)],
            vec![Scalar::from_int(1)],
        ),
        (
            "1:3",
            1,
            vec![Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5), Scalar::zero()],
            vec![Scalar::zero(), Scalar::from_ratio(5, 13), Scalar::from_ratio(12, 13)],
        ),
    ];
    for (spec, i, e, f) in conj_cases {
        match SpinDatum::parse(spec).and_then(|d| conj_action_check(&d, i, &e, &f)) {
            Ok(sub) => r.extend(sub),
            Err(err) => r.check(format!("conj.{spec}"), "runs", move || (false, err.to_string())),
        }
    }
    r.check("clifford.simply-connected-table", "10 cases agree", || {
        let m = |pairs: &[(u32, u32)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        let cases: Vec<(GroupType, BTreeMap<u32, u32>, bool)> = vec![
            (GroupType::SL, m(&[(1, 1)]), true),
            (GroupType::SL, m(&[(2, 7), (4, 3)]), true),
            (GroupType::Spin, m(&[(1, 3)]), true),
            (GroupType::Spin, m(&[(1, 3), (3, 3)]), false),
            (GroupType::Spin, m(&[(1, 2), (3, 2), (5, 2)]), true),
            (GroupType::Spin, m(&[(2, 9), (4, 9)]), true),
            (GroupType::Spin, m(&[(1, 5), (5, 1)]), true),
            (GroupType::Symplectic, m(&[(2, 3)]), false),
            (GroupType::Symplectic, m(&[(2, 2), (1, 5)]), true),
            (GroupType::Symplectic, m(&[(1, 3), (3, 3), (2, 1)]), true),
        ];
        let bad = cases
            .iter()
            .filter(|(ty, m, expect)| simply_connected(*ty, m) != *expect)
            .count();
        (bad == 0, if bad == 0 { "10 cases agree".into() } else { format!("{bad} disagree") })
    });
    r.check("clifford.exceptional-rows", "all rows retrievable", || {
        let probes: Vec<(ExceptionalType, &str)> = vec![
            (ExceptionalType::G2, "G_2(a_1)"),
            (ExceptionalType::F4, "A_1~A_1"),
            (ExceptionalType::F4, "B_3"),
            (ExceptionalType::F4, "F_4(a_3)"),
            (ExceptionalType::E6, "A_2"),
            (ExceptionalType::E7, "A_2A_1^2"),
            (ExceptionalType::E7, "E_7(a_5)"),
            (ExceptionalType::E8, "A_2A_1^2"),
            (ExceptionalType::E8, "A_3A_2A_1"),
            (ExceptionalType::E8, "A_4A_2"),
            (ExceptionalType::E8, "D_4(a_1)A_2"),
            (ExceptionalType::E8, "D_5(a_1)A_1"),
            (ExceptionalType::E8, "A_6"),
            (ExceptionalType::E8, "E_8(a_7)"),
        ];
        let mut bad = 0usize;
        for (g, l) in &probes {
            if exceptional_lookup(*g, l).is_err() {
                bad += 1;
            }
        }
        // Every shipped explicit row must be reachable under its own label.
        for rec in EXCEPTIONAL_TABLE {
            if rec.orbit_label == "*" {
                continue;
            }
            match exceptional_lookup(rec.group, rec.orbit_label) {
                Ok(found) if found == rec => {}
                _ => bad += 1,
            }
        }
        (bad == 0, if bad == 0 { "all rows retrievable".into() } else { format!("{bad} failures") })
    });
    r
}

// ---- simply-connectedness and the exceptional table ---------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupType {
    SL,
    Spin,
    Symplectic,
}

impl std::str::FromStr for GroupType {
    type Err = String;
    fn from_str(s: &str) -> Result<GroupType, String> {
        match s {
            "SL" => Ok(GroupType::SL),
            "Spin" => Ok(GroupType::Spin),
            "Sp" | "Symplectic" => Ok(GroupType::Symplectic),
            other => Err(format!("unknown group type {other:?}")),
        }
    }
}

/// Whether the derived group of H^0 is simply connected for the given
/// multiplicity map.
pub fn simply_connected(ty: GroupType, m: &BTreeMap<u32, u32>) -> bool {
    match ty {
        GroupType::SL => true,
        GroupType::Spin => {
            m.iter()
                .filter(|&(&i, &mi)| i % 2 == 1 && mi >= 3)
                .count()
                <= 1
        }
        GroupType::Symplectic => m
            .iter()
            .all(|(&i, &mi)| i % 2 == 1 || mi < 3),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalType {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl std::str::FromStr for ExceptionalType {
    type Err = String;
    fn from_str(s: &str) -> Result<ExceptionalType, String> {
        match s {
            "G2" => Ok(ExceptionalType::G2),
            "F4" => Ok(ExceptionalType::F4),
            "E6" => Ok(ExceptionalType::E6),
            "E7" => Ok(ExceptionalType::E7),
            "E8" => Ok(ExceptionalType::E8),
            other => Err(format!("unknown exceptional type {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalRecord {
    pub group: ExceptionalType,
    pub orbit_label: &'static str,
    /// Structure of H (equal to H^0 unless a component group is listed).
    pub h_structure: &'static str,
    pub component_group: &'static str,
    /// Whether the derived group of H^0 is simply connected.
    pub simply_connected: bool,
}

/// The shipped exceptional table: the explicitly listed special orbits,
/// plus a wildcard row per group covering "all other" orbits.
pub const EXCEPTIONAL_TABLE: &[ExceptionalRecord] = &[
    ExceptionalRecord {
        group: ExceptionalType::G2,
        orbit_label: "*",
        h_structure: "(H^0)_der simply connected",
        component_group: "1",
        simply_connected: true,
    },
    ExceptionalRecord {
        group: ExceptionalType::E6,
        orbit_label: "*",
        h_structure: "(H^0)_der simply connected",
        component_group: "1",
        simply_connected: true,
    },
    ExceptionalRecord {
        group: ExceptionalType::F4,
        orbit_label: "A_1~A_1",
        h_structure: "PGL_2 x SL_2",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::F4,
        orbit_label: "B_3",
        h_structure: "PGL_2",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::F4,
        orbit_label: "*",
        h_structure: "(H^0)_der simply connected",
        component_group: "1",
        simply_connected: true,
    },
    ExceptionalRecord {
        group: ExceptionalType::E7,
        orbit_label: "A_2A_1^2",
        h_structure: "SL_2^3 / {+-1} (diagonal centre)",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::E7,
        orbit_label: "*",
        h_structure: "(H^0)_der simply connected",
        component_group: "1",
        simply_connected: true,
    },
    ExceptionalRecord {
        group: ExceptionalType::E8,
        orbit_label: "A_2A_1^2",
        h_structure: "(SL_2 x Spin_7) / {+-1} (diagonal centre)",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::E8,
        orbit_label: "A_3A_2A_1",
        h_structure: "PGL_2 x SL_2",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::E8,
        orbit_label: "A_4A_2",
        h_structure: "SL_2^2 / {+-1} (diagonal centre)",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::E8,
        orbit_label: "D_4(a_1)A_2",
        h_structure: "PGL_3 . Z/2 (outer involution)",
        component_group: "Z/2",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::E8,
        orbit_label: "D_5(a_1)A_1",
        h_structure: "PGL_2 x SL_2",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::E8,
        orbit_label: "A_6",
        h_structure: "SL_2^2 / {+-1} (diagonal centre)",
        component_group: "1",
        simply_connected: false,
    },
    ExceptionalRecord {
        group: ExceptionalType::E8,
        orbit_label: "*",
        h_structure: "(H^0)_der simply connected",
        component_group: "1",
        simply_connected: true,
    },
];

/// Look up an orbit label; explicit rows win over the per-group wildcard.
pub fn exceptional_lookup(
    group: ExceptionalType,
    orbit_label: &str,
) -> Result<&'static ExceptionalRecord, CliffordError> {
    EXCEPTIONAL_TABLE
        .iter()
        .find(|rec| rec.group == group && rec.orbit_label == orbit_label)
        .or_else(|| {
            EXCEPTIONAL_TABLE
                .iter()
                .find(|rec| rec.group == group && rec.orbit_label == "*")
        })
        .ok_or_else(|| CliffordError::UnknownLabel(format!("{group:?}:{orbit_label}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn generator_relations() {
        let e1 = CliffordElement::monomial(3, 0b001, s(1));
        let e2 = CliffordElement::monomial(3, 0b010, s(1));
        assert_eq!(e1.mul(&e1).unwrap(), CliffordElement::one(3));
        let anti = e1.mul(&e2).unwrap().add(&e2.mul(&e1).unwrap()).unwrap();
        assert!(anti.is_zero());
    }

    #[test]
    fn unit_vector_squares_to_one() {
        let v = CliffordElement::vector(&[Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5)]);
        assert_eq!(v.mul(&v).unwrap(), CliffordElement::one(2));
    }

    #[test]
    fn multiplication_associative_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let rand_el = |rng: &mut ChaCha8Rng| {
                let mut el = CliffordElement::zero(3);
                for subset in 0..8u32 {
                    el.add_term(subset, s(rng.gen_range(-2..=2)));
                }
                el
            };
            let (a, b, c) = (rand_el(&mut rng), rand_el(&mut rng), rand_el(&mut rng));
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn beta_basic_cases() {
        let e1 = vec![s(1), s(0)];
        assert_eq!(beta(2, &[e1.clone()], &[s(1), s(0)]).unwrap(), vec![s(1), s(0)]);
        assert_eq!(beta(2, &[e1.clone()], &[s(0), s(1)]).unwrap(), vec![s(0), s(-1)]);
        // Double sign cancellation on a perpendicular vector.
        let e2 = vec![s(0), s(1), s(0)];
        let e1_3 = vec![s(1), s(0), s(0)];
        assert_eq!(
            beta(3, &[e1_3, e2], &[s(0), s(0), s(1)]).unwrap(),
            vec![s(0), s(0), s(1)]
        );
    }

    #[test]
    fn beta_random_suite_small() {
        let r = beta_suite(5, 40, 0xC4A7);
        assert!(r.all_passed());
    }

    #[test]
    fn y_tilde_squares() {
        let d = SpinDatum::parse("1:1,3:1").unwrap();
        assert_eq!(d.n(), 4);
        let y1 = d.y_tilde(1).unwrap();
        assert_eq!(y1.mul(&y1).unwrap(), CliffordElement::one(4));
        let y3 = d.y_tilde(3).unwrap();
        assert_eq!(
            y3.mul(&y3).unwrap(),
            CliffordElement::scalar(4, s(-1))
        );
    }

    #[test]
    fn x_antisymmetric() {
        let d = SpinDatum::parse("1:2").unwrap();
        let e = vec![Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5)];
        let f = vec![Scalar::from_ratio(-4, 5), Scalar::from_ratio(3, 5)];
        let xef = d.x(1, &e, &f).unwrap();
        let xfe = d.x(1, &f, &e).unwrap();
        assert_eq!(xef, xfe.neg());
        // Corollary: x_{e,f} x_{f,e} = -x_{e,f}^2.
        assert_eq!(
            xef.mul(&xfe).unwrap(),
            xef.mul(&xef).unwrap().neg()
        );
    }

    #[test]
    fn delta_orders() {
        for (spec, order) in [("1:1", 4usize), ("1:1,3:1", 8), ("1:1,3:1,5:1", 16)] {
            let d = SpinDatum::parse(spec).unwrap();
            let r = delta_check(&d).unwrap();
            assert!(r.all_passed(), "delta failed for {spec}");
            let order_check = r
                .checks
                .iter()
                .find(|c| c.name == "delta.generated-order")
                .unwrap();
            assert_eq!(order_check.actual, order.to_string());
        }
    }

    #[test]
    fn conj_action_m1_and_m3() {
        let d1 = SpinDatum::parse("1:1").unwrap();
        let e = d1.e_unit(1).unwrap();
        assert!(conj_action_check(&d1, 1, &e, &e).unwrap().all_passed());
        let d3 = SpinDatum::parse("1:3").unwrap();
        let e = vec![Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5), s(0)];
        let f = vec![s(0), Scalar::from_ratio(5, 13), Scalar::from_ratio(12, 13)];
        assert!(conj_action_check(&d3, 1, &e, &f).unwrap().all_passed());
    }

    #[test]
    fn simply_connected_cases() {
        let m = |pairs: &[(u32, u32)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        assert!(simply_connected(GroupType::SL, &m(&[(2, 5)])));
        assert!(simply_connected(GroupType::Spin, &m(&[(1, 3)])));
        assert!(!simply_connected(GroupType::Spin, &m(&[(1, 3), (3, 3)])));
        assert!(!simply_connected(GroupType::Symplectic, &m(&[(2, 3)])));
        assert!(simply_connected(GroupType::Symplectic, &m(&[(2, 2), (1, 5)])));
    }

    #[test]
    fn exceptional_rows() {
        let rec = exceptional_lookup(ExceptionalType::F4, "B_3").unwrap();
        assert_eq!(rec.h_structure, "PGL_2");
        assert!(!rec.simply_connected);
        let rec = exceptional_lookup(ExceptionalType::E8, "D_4(a_1)A_2").unwrap();
        assert_eq!(rec.component_group, "Z/2");
        let rec = exceptional_lookup(ExceptionalType::E6, "A_2").unwrap();
        assert!(rec.simply_connected);
        let rec = exceptional_lookup(ExceptionalType::G2, "G_2(a_1)").unwrap();
        assert!(rec.simply_connected);
    }

    #[test]
    fn size_limit_enforced() {
        assert!(matches!(
            SpinDatum::parse("1:15"),
            Err(CliffordError::SizeLimit(15))
        ));
    }
}

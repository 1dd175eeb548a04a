//! W-graphs for the affine Coxeter system of type C-tilde and their Hecke
//! modules over exact polynomials in t = q^(1/2): relation verification, the
//! omega extension, parabolic restriction and vertex counts, the
//! decomposition of the lambda = 1 cycle graph, lambda-independence of
//! restricted traces, and the formal basis identities tied to the reduced
//! Gram matrix of the circle family.

use crate::families::{golden_reduced_gram, FamilyId};
use crate::mat::Mat;
use crate::poly::Polynomial;
use crate::report::{Reporter, Status};
use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Poly = Polynomial<Scalar>;
pub type PolyMat = Mat<Poly>;

/// Default seed for all randomized word sampling.
pub const DEFAULT_SEED: u64 = 0xC4A7;

#[derive(Debug, thiserror::Error)]
pub enum HeckeError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("relation failure: {0}")]
    RelationFailure(String),
    #[error("restriction stability failure: {0}")]
    StabilityFailure(String),
    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    A,
    B,
    C,
    D,
}

impl std::str::FromStr for GraphKind {
    type Err = String;
    fn from_str(s: &str) -> Result<GraphKind, String> {
        match s {
            "a" => Ok(GraphKind::A),
            "b" => Ok(GraphKind::B),
            "c" => Ok(GraphKind::C),
            "d" => Ok(GraphKind::D),
            other => Err(format!("unknown graph kind {other:?}")),
        }
    }
}

/// A W-graph for the generators s_0..s_n: labeled vertices, singleton-style
/// mark sets, and a directed weight function mu(y, x) read as the
/// coefficient of v_y in T_s v_x.
#[derive(Clone)]
pub struct WGraph {
    /// The Coxeter rank parameter: generators are s_0..s_n with braid order
    /// 4 between s_0,s_1 and s_{n-1},s_n, 3 between other neighbors.
    pub n: usize,
    pub vertices: Vec<String>,
    pub marks: Vec<Vec<usize>>,
    pub weights: BTreeMap<(usize, usize), Scalar>,
}

impl WGraph {
    pub fn braid_order(&self, i: usize, j: usize) -> usize {
        let (lo, hi) = (i.min(j), i.max(j));
        if hi - lo >= 2 {
            2
        } else if lo == 0 || hi == self.n {
            4
        } else {
            3
        }
    }

    fn mu(&self, y: usize, x: usize) -> Scalar {
        self.weights
            .get(&(y, x))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }
}

/// Build one of the four shipped graph kinds. `lambda` is required (nonzero)
/// for kind d and ignored otherwise.
pub fn wgraph(kind: GraphKind, n: usize, lambda: Option<Scalar>) -> Result<WGraph, HeckeError> {
    if n < 2 {
        return Err(HeckeError::BadParams(format!("n = {n} must be >= 2")));
    }
    let one = Scalar::from_int(1);
    let two = Scalar::from_int(2);
    let mut weights = BTreeMap::new();
    let sym = |a: usize, b: usize, w_ab: Scalar, w_ba: Scalar, m: &mut BTreeMap<(usize, usize), Scalar>| {
        m.insert((a, b), w_ab);
        m.insert((b, a), w_ba);
    };
    match kind {
        GraphKind::A => {
            // Path v_0 - v_1 - ... - v_n with doubled weights into the ends.
            let vertices = (0..=n).map(|i| format!("v{i}")).collect();
            let marks = (0..=n).map(|i| vec![i]).collect();
            for i in 0..n {
                let (w_fwd, w_back) = if i == 0 {
                    (two.clone(), one.clone()) // mu(v0, v1) = 2
                } else if i == n - 1 {
                    (one.clone(), two.clone()) // mu(vn, v_{n-1}) = 2
                } else {
                    (one.clone(), one.clone())
                };
                sym(i, i + 1, w_fwd, w_back, &mut weights);
            }
            Ok(WGraph {
                n,
                vertices,
                marks,
                weights,
            })
        }
        GraphKind::B => {
            // Path v_1 - ... - v_{n-1}, all weights 1.
            let vertices = (1..n).map(|i| format!("v{i}")).collect();
            let marks = (1..n).map(|i| vec![i]).collect();
            for k in 0..n.saturating_sub(2) {
                sym(k, k + 1, one.clone(), one.clone(), &mut weights);
            }
            Ok(WGraph {
                n,
                vertices,
                marks,
                weights,
            })
        }
        GraphKind::C => {
            // Two isolated vertices v_0 and v_n.
            Ok(WGraph {
                n,
                vertices: vec!["v0".into(), format!("v{n}")],
                marks: vec![vec![0], vec![n]],
                weights,
            })
        }
        GraphKind::D => {
            let lambda = lambda
                .ok_or_else(|| HeckeError::BadParams("kind d needs a lambda value".into()))?;
            let linv = lambda
                .inv()
                .ok_or_else(|| HeckeError::BadParams("lambda must be nonzero".into()))?;
            // 2n-cycle: indices 0 = v_0, 1..n-1 = v_i, n = v_n,
            // n+i = v'_i for i in 1..n-1.
            let mut vertices = vec!["v0".to_string()];
            let mut marks = vec![vec![0]];
            for i in 1..n {
                vertices.push(format!("v{i}"));
                marks.push(vec![i]);
            }
            vertices.push(format!("v{n}"));
            marks.push(vec![n]);
            for i in 1..n {
                vertices.push(format!("v'{i}"));
                marks.push(vec![i]);
            }
            let vp = |i: usize| if i == 0 { 0 } else if i == n { n } else { n + i };
            // Primary arc v_0 - v_1 - ... - v_n.
            sym(0, 1, lambda.clone(), linv.clone(), &mut weights);
            for i in 1..n {
                sym(i, i + 1, one.clone(), one.clone(), &mut weights);
            }
            // Return arc v_n - v'_{n-1} - ... - v'_1 - v_0.
            sym(n, vp(n - 1), lambda.clone(), linv.clone(), &mut weights);
            for i in (1..n - 1).rev() {
                sym(vp(i + 1), vp(i), one.clone(), one.clone(), &mut weights);
            }
            sym(vp(1), 0, one.clone(), one.clone(), &mut weights);
            Ok(WGraph {
                n,
                vertices,
                marks,
                weights,
            })
        }
    }
}

/// The Hecke module of a W-graph: one generator matrix per s_i, verified to
/// satisfy the quadratic and braid relations as exact polynomial identities.
pub struct HeckeModule {
    pub n: usize,
    pub labels: Vec<String>,
    pub gens: Vec<PolyMat>,
}

fn t() -> Poly {
    Poly::var()
}

fn t2() -> Poly {
    Poly::monomial(Scalar::from_int(1), 2)
}

pub fn module(g: &WGraph) -> Result<HeckeModule, HeckeError> {
    let module = build_module(g);
    module.verify_relations(g)?;
    Ok(module)
}

/// The generator matrices of a W-graph without relation verification; used
/// for parabolic pieces where only a subset of the braid relations applies.
fn build_module(g: &WGraph) -> HeckeModule {
    let nv = g.vertices.len();
    let mut gens = Vec::with_capacity(g.n + 1);
    for s in 0..=g.n {
        let m = Mat::from_fn(nv, nv, |y, x| {
            let x_marked = g.marks[x].contains(&s);
            if y == x {
                if x_marked {
                    Poly::constant(Scalar::from_int(-1))
                } else {
                    t2()
                }
            } else if !x_marked && g.marks[y].contains(&s) {
                Poly::constant(g.mu(y, x)) * t()
            } else {
                Poly::zero()
            }
        });
        gens.push(m);
    }
    HeckeModule {
        n: g.n,
        labels: g.vertices.clone(),
        gens,
    }
}

impl HeckeModule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// (T + 1)(T - t^2) = 0 for every generator, then all braid relations.
    pub fn verify_relations(&self, g: &WGraph) -> Result<(), HeckeError> {
        self.verify_relations_excluding(g, None)
    }

    /// Relation check restricted to the parabolic subalgebra omitting the
    /// generator `skip` (braid relations involving it are not required).
    pub fn verify_relations_excluding(
        &self,
        g: &WGraph,
        skip: Option<usize>,
    ) -> Result<(), HeckeError> {
        let nv = self.dim();
        let id = Mat::<Poly>::identity(nv);
        let t2id = id.scale(&t2());
        for (s, m) in self.gens.iter().enumerate() {
            let quad = &(m + &id) * &(m - &t2id);
            if !quad.is_zero() {
                return Err(HeckeError::RelationFailure(format!(
                    "quadratic relation fails for s{s}"
                )));
            }
        }
        for i in 0..=g.n {
            for j in i + 1..=g.n {
                if skip == Some(i) || skip == Some(j) {
                    continue;
                }
                let m = g.braid_order(i, j);
                let lhs = alternating_product(&self.gens[i], &self.gens[j], m);
                let rhs = alternating_product(&self.gens[j], &self.gens[i], m);
                if lhs != rhs {
                    return Err(HeckeError::RelationFailure(format!(
                        "braid relation of order {m} fails for (s{i}, s{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The product of T over a word of generator indices.
    pub fn word_matrix(&self, word: &[usize]) -> PolyMat {
        let mut acc = Mat::<Poly>::identity(self.dim());
        for &s in word {
            acc = &acc * &self.gens[s];
        }
        acc
    }

    pub fn word_trace(&self, word: &[usize]) -> Poly {
        self.word_matrix(word).trace()
    }

    /// Every generator evaluated at t = 1; checks the specializations are
    /// involutions and still satisfy the braid relations.
    pub fn specialize_q1(&self, g: &WGraph) -> Result<Vec<Mat<Scalar>>, HeckeError> {
        let one = Scalar::from_int(1);
        let spec: Vec<Mat<Scalar>> = self
            .gens
            .iter()
            .map(|m| Mat::from_fn(m.rows(), m.cols(), |i, j| m.at(i, j).eval(&one)))
            .collect();
        let id = Mat::<Scalar>::identity(self.dim());
        for (s, m) in spec.iter().enumerate() {
            if &(m * m) != &id {
                return Err(HeckeError::RelationFailure(format!(
                    "specialized s{s} is not an involution"
                )));
            }
        }
        for i in 0..=g.n {
            for j in i + 1..=g.n {
                let m = g.braid_order(i, j);
                let lhs = alternating_product(&spec[i], &spec[j], m);
                let rhs = alternating_product(&spec[j], &spec[i], m);
                if lhs != rhs {
                    return Err(HeckeError::RelationFailure(format!(
                        "specialized braid relation fails for (s{i}, s{j})"
                    )));
                }
            }
        }
        Ok(spec)
    }
}

fn alternating_product<T: crate::ring::Ring>(a: &Mat<T>, b: &Mat<T>, m: usize) -> Mat<T> {
    let mut acc = Mat::<T>::identity(a.rows());
    for k in 0..m {
        acc = if k % 2 == 0 { &acc * a } else { &acc * b };
    }
    acc
}

/// The diagram automorphism s_i -> s_{n-i} as a basis permutation:
/// omega^2 = 1 and omega T_{s_i} omega = T_{s_{n-i}}.
pub fn omega(kind: GraphKind, g: &WGraph, m: &HeckeModule) -> Result<PolyMat, HeckeError> {
    let n = g.n;
    let nv = g.vertices.len();
    let perm: Vec<usize> = match kind {
        GraphKind::A => (0..nv).map(|i| n - i).collect(),
        GraphKind::B => (0..nv).map(|i| nv - 1 - i).collect(),
        GraphKind::C => vec![1, 0],
        GraphKind::D => {
            // v_0 <-> v_n, v_i <-> v'_{n-i} for i in [1, n-1].
            let vp = |i: usize| if i == 0 { 0 } else if i == n { n } else { n + i };
            let mut p = vec![0usize; nv];
            p[0] = n;
            p[n] = 0;
            for i in 1..n {
                p[i] = vp(n - i);
                p[vp(i)] = n - i;
            }
            p
        }
    };
    let om = Mat::from_fn(nv, nv, |i, j| {
        if perm[j] == i {
            Poly::one()
        } else {
            Poly::zero()
        }
    });
    if &(&om * &om) != &Mat::<Poly>::identity(nv) {
        return Err(HeckeError::RelationFailure("omega squared is not 1".into()));
    }
    for i in 0..=n {
        let lhs = &(&om * &m.gens[i]) * &om;
        if lhs != m.gens[n - i] {
            return Err(HeckeError::RelationFailure(format!(
                "omega conjugation fails: s{i} does not map to s{}",
                n - i
            )));
        }
    }
    Ok(om)
}

/// Restriction to the parabolic subalgebra omitting s_i: the span of the
/// vertices not marked i must be the vertex-deleted graph's module, and the
/// quotient must be scalar t^2 for every remaining generator. Returns the
/// number of deleted vertices.
pub fn restrict(m: &HeckeModule, g: &WGraph, i: usize) -> Result<usize, HeckeError> {
    let keep: Vec<usize> = (0..g.vertices.len())
        .filter(|&v| !g.marks[v].contains(&i))
        .collect();
    let drop: Vec<usize> = (0..g.vertices.len())
        .filter(|&v| g.marks[v].contains(&i))
        .collect();
    // Stability: no generator j != i moves a kept vertex out of the span.
    for j in 0..=g.n {
        if j == i {
            continue;
        }
        for &x in &keep {
            for &y in &drop {
                if !m.gens[j].at(y, x).is_zero() {
                    return Err(HeckeError::StabilityFailure(format!(
                        "T_s{j} moves {} onto {}",
                        g.vertices[x], g.vertices[y]
                    )));
                }
            }
        }
    }
    // The submodule is the module of the vertex-deleted W-graph.
    let sub_graph = WGraph {
        n: g.n,
        vertices: keep.iter().map(|&v| g.vertices[v].clone()).collect(),
        marks: keep.iter().map(|&v| g.marks[v].clone()).collect(),
        weights: g
            .weights
            .iter()
            .filter_map(|(&(y, x), w)| {
                let yi = keep.iter().position(|&v| v == y)?;
                let xi = keep.iter().position(|&v| v == x)?;
                Some(((yi, xi), w.clone()))
            })
            .collect(),
    };
    let sub_module = build_module(&sub_graph);
    sub_module.verify_relations_excluding(&sub_graph, Some(i))?;
    for j in 0..=g.n {
        let sub = Mat::from_fn(keep.len(), keep.len(), |a, b| {
            m.gens[j].at(keep[a], keep[b]).clone()
        });
        if sub != sub_module.gens[j] {
            return Err(HeckeError::StabilityFailure(format!(
                "submodule action of s{j} differs from the vertex-deleted graph"
            )));
        }
    }
    // The quotient action of every remaining generator is t^2.
    for j in 0..=g.n {
        if j == i {
            continue;
        }
        for &y in &drop {
            for &yp in &drop {
                let expect = if y == yp { t2() } else { Poly::zero() };
                if m.gens[j].at(y, yp) != &expect {
                    return Err(HeckeError::StabilityFailure(format!(
                        "quotient action of s{j} is not scalar t^2"
                    )));
                }
            }
        }
    }
    Ok(drop.len())
}

/// The number of vertices marked i in each of the kinds a, b, c.
pub fn vertex_counts(n: usize, i: usize) -> (usize, usize, usize) {
    let na = 1;
    let nb = usize::from((1..n).contains(&i));
    let nc = usize::from(i == 0 || i == n);
    (na, nb, nc)
}

/// Deterministic word sample: exhaustive up to length 3, then `per_length`
/// random words for each length in 4..=6 over the allowed generators.
pub fn sample_words(allowed: &[usize], seed: u64, per_length: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &layer {
            for &s in allowed {
                let mut w2 = w.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for len in 4..=6 {
        for _ in 0..per_length {
            let w: Vec<usize> = (0..len)
                .map(|_| allowed[rng.gen_range(0..allowed.len())])
                .collect();
            words.push(w);
        }
    }
    words
}

/// The involution of the lambda = 1 cycle graph (v_i <-> v'_i) and its
/// eigenspace decomposition: dimensions (n+1, n-1), both T-stable, and the
/// trace of every sampled word splits as the (a)-trace plus the (b)-trace.
pub struct DecomposeReport {
    pub plus_dim: usize,
    pub minus_dim: usize,
    pub words_checked: usize,
}

pub fn decompose_d1(n: usize, seed: u64) -> Result<DecomposeReport, HeckeError> {
    let g = wgraph(GraphKind::D, n, Some(Scalar::from_int(1)))?;
    let m = module(&g)?;
    let nv = g.vertices.len();
    // theta: v_i <-> v'_i, fixing v_0 and v_n.
    let vp = |i: usize| if i == 0 { 0 } else if i == n { n } else { n + i };
    let mut perm: Vec<usize> = (0..nv).collect();
    for i in 1..n {
        perm[i] = vp(i);
        perm[vp(i)] = i;
    }
    let theta = Mat::from_fn(nv, nv, |i, j| {
        if perm[j] == i {
            Poly::one()
        } else {
            Poly::zero()
        }
    });
    for (s, gen) in m.gens.iter().enumerate() {
        if &(&theta * gen) != &(gen * &theta) {
            return Err(HeckeError::DecompositionFailure(format!(
                "theta does not commute with s{s}"
            )));
        }
    }
    // Eigenspace dimensions via the fixed/swapped orbit structure.
    let fixed = (0..nv).filter(|&v| perm[v] == v).count();
    let plus_dim = fixed + (nv - fixed) / 2;
    let minus_dim = (nv - fixed) / 2;
    if (plus_dim, minus_dim) != (n + 1, n - 1) {
        return Err(HeckeError::DecompositionFailure(format!(
            "eigenspace dimensions ({plus_dim}, {minus_dim}) differ from (n+1, n-1)"
        )));
    }
    // Trace equality against the modules of kinds a and b.
    let ga = wgraph(GraphKind::A, n, None)?;
    let gb = wgraph(GraphKind::B, n, None)?;
    let ma = module(&ga)?;
    let mb = module(&gb)?;
    let gens: Vec<usize> = (0..=n).collect();
    let words = sample_words(&gens, seed, 100);
    for w in &words {
        let lhs = m.word_trace(w);
        let rhs = ma.word_trace(w) + mb.word_trace(w);
        if lhs != rhs {
            return Err(HeckeError::DecompositionFailure(format!(
                "trace mismatch on word {w:?}"
            )));
        }
    }
    Ok(DecomposeReport {
        plus_dim,
        minus_dim,
        words_checked: words.len(),
    })
}

/// True iff the restricted traces (words avoiding s_i) agree across all the
/// sampled lambda values.
pub fn lambda_independence(
    n: usize,
    i: usize,
    samples: &[Scalar],
    seed: u64,
) -> Result<bool, HeckeError> {
    let modules: Vec<HeckeModule> = samples
        .iter()
        .map(|l| module(&wgraph(GraphKind::D, n, Some(l.clone()))?))
        .collect::<Result<_, _>>()?;
    let allowed: Vec<usize> = (0..=n).filter(|&j| j != i).collect();
    let words = sample_words(&allowed, seed, 100);
    for w in &words {
        let base = modules[0].word_trace(w);
        for m in &modules[1..] {
            if m.word_trace(w) != base {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Block-triangularity trace law on kind a: for words over the generators
/// avoiding s_i, the full trace equals the vertex-deleted trace plus
/// n^i_a * t^(2k).
pub fn trace_law_kind_a(n: usize, i: usize, seed: u64) -> Result<bool, HeckeError> {
    let g = wgraph(GraphKind::A, n, None)?;
    let m = module(&g)?;
    let keep: Vec<usize> = (0..g.vertices.len())
        .filter(|&v| !g.marks[v].contains(&i))
        .collect();
    let sub_graph = WGraph {
        n: g.n,
        vertices: keep.iter().map(|&v| g.vertices[v].clone()).collect(),
        marks: keep.iter().map(|&v| g.marks[v].clone()).collect(),
        weights: g
            .weights
            .iter()
            .filter_map(|(&(y, x), w)| {
                let yi = keep.iter().position(|&v| v == y)?;
                let xi = keep.iter().position(|&v| v == x)?;
                Some(((yi, xi), w.clone()))
            })
            .collect(),
    };
    let sub = build_module(&sub_graph);
    sub.verify_relations_excluding(&sub_graph, Some(i))?;
    let n_i = g.vertices.len() - keep.len();
    let allowed: Vec<usize> = (0..=n).filter(|&j| j != i).collect();
    for w in sample_words(&allowed, seed, 50) {
        let full = m.word_trace(&w);
        let part = sub.word_trace(&w)
            + Poly::monomial(Scalar::from_int(n_i as i64), 2 * w.len());
        if full != part {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The formal-basis identities on the span of e_{1,1}, e_{1,eps}, e_{r,1},
/// e_{r,eps}: the coefficient matrix F squares to 1, matches the circle
/// family's reduced Gram matrix entrywise, the stated sum rule follows, and
/// eliminating e_{r,eps} keeps the inverse equalities consistent.
pub fn vrc_identities() -> Reporter {
    let mut r = Reporter::new();
    let h = Scalar::from_ratio(1, 2);
    let sgn = |v: i64| h.clone() * Scalar::from_int(v);
    let f = Mat::from_rows(vec![
        vec![sgn(1), sgn(1), sgn(1), sgn(1)],
        vec![sgn(1), sgn(1), sgn(-1), sgn(-1)],
        vec![sgn(1), sgn(-1), sgn(1), sgn(-1)],
        vec![sgn(1), sgn(-1), sgn(-1), sgn(1)],
    ]);
    r.check("vrc.f-squared", "identity", || {
        let ok = &f * &f == Mat::identity(4);
        (ok, if ok { "identity".into() } else { "not identity".into() })
    });
    let reduced = golden_reduced_gram(FamilyId::F15RsqMinusOne).unwrap();
    r.check("vrc.f-equals-reduced-gram", "entry-exact match", || {
        let ok = f == reduced;
        (ok, if ok { "entry-exact match".into() } else { "mismatch".into() })
    });
    // Sum rule: row(phi*_{1,1}) + row(phi*_{1,eps}) = e_{1,1} + e_{1,eps}.
    let sum: Vec<Scalar> = (0..4)
        .map(|j| f.at(0, j).clone() + f.at(1, j).clone())
        .collect();
    r.check_eq(
        "vrc.sum-rule",
        "(1, 1, 0, 0)".to_string(),
        format!(
            "({})",
            sum.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
        ),
    );
    // Inverse equalities: applying F to the phi* rows recovers the e basis.
    r.check("vrc.inverse-equalities", "e basis recovered", || {
        let ok = (0..4).all(|k| {
            let phi: Vec<Scalar> = (0..4).map(|j| f.at(k, j).clone()).collect();
            let back = f.mul_vec(&phi);
            (0..4).all(|j| {
                let expect = if j == k {
                    Scalar::from_int(1)
                } else {
                    Scalar::zero()
                };
                back[j] == expect
            })
        });
        (ok, if ok { "e basis recovered".into() } else { "failed".into() })
    });
    // Secondary pass with e_{r,eps} = 0: the inverse equalities restricted
    // to the remaining coordinates stay consistent.
    r.check("vrc.e-r-eps-zero", "consistent", || {
        let ok = (0..3).all(|k| {
            let mut e = vec![Scalar::zero(); 4];
            e[k] = Scalar::from_int(1);
            let phi = f.mul_vec(&e);
            let back = f.mul_vec(&phi);
            back == e
        });
        (ok, if ok { "consistent".into() } else { "inconsistent".into() })
    });
    // Two consecutive displays carry the same label in the source; they are
    // tracked internally as (g) and (h).
    r.note(
        "vrc.label-collision",
        Status::Skipped,
        "distinct labels",
        "two displays share one label; named (g) and (h) internally",
    );
    r
}

/// The full check suite for one n: relations for all four kinds, omega,
/// restriction with the counting identities, the lambda = 1 decomposition,
/// lambda-independence, the block-triangularity trace law, the q = 1
/// specialization, and the formal-basis identities.
pub fn hecke_report(n: usize, seed: u64) -> Reporter {
    let mut r = Reporter::new();
    let lambdas = [Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(5)];
    let mut modules: BTreeMap<&str, (WGraph, HeckeModule)> = BTreeMap::new();
    for (kind, tag) in [(GraphKind::A, "a"), (GraphKind::B, "b"), (GraphKind::C, "c")] {
        r.check(format!("hecke{n}.relations.{tag}"), "quadratic + braid hold", || {
            match wgraph(kind, n, None).and_then(|g| module(&g).map(|m| (g, m))) {
                Ok(pair) => {
                    modules.insert(tag, pair);
                    (true, "quadratic + braid hold".into())
                }
                Err(e) => (false, e.to_string()),
            }
        });
    }
    for l in &lambdas {
        r.check(format!("hecke{n}.relations.d-lambda-{l}"), "quadratic + braid hold", || {
            match wgraph(GraphKind::D, n, Some(l.clone())).and_then(|g| module(&g).map(|m| (g, m))) {
                Ok(pair) => {
                    if *l == Scalar::from_int(1) {
                        modules.insert("d", pair);
                    }
                    (true, "quadratic + braid hold".into())
                }
                Err(e) => (false, e.to_string()),
            }
        });
    }
    for (kind, tag) in [
        (GraphKind::A, "a"),
        (GraphKind::B, "b"),
        (GraphKind::C, "c"),
        (GraphKind::D, "d"),
    ] {
        r.check(format!("hecke{n}.omega.{tag}"), "conjugation identity holds", || {
            match modules.get(tag) {
                Some((g, m)) => match omega(kind, g, m) {
                    Ok(_) => (true, "conjugation identity holds".into()),
                    Err(e) => (false, e.to_string()),
                },
                None => (false, "module unavailable".into()),
            }
        });
    }
    r.check(format!("hecke{n}.restriction"), "stable with counting identities", || {
        for i in 0..=n {
            let counts: Result<Vec<usize>, HeckeError> = ["a", "b", "c"]
                .iter()
                .map(|tag| {
                    let (g, m) = modules
                        .get(*tag)
                        .ok_or_else(|| HeckeError::BadParams("module unavailable".into()))?;
                    restrict(m, g, i)
                })
                .collect();
            let counts = match counts {
                Ok(c) => c,
                Err(e) => return (false, format!("i = {i}: {e}")),
            };
            let (na, nb, nc) = (counts[0], counts[1], counts[2]);
            if (na, nb, nc) != vertex_counts(n, i)
                || 2 * na != na + nb + nc
                || 2 * nb != na + nb - nc
                || 2 * nc != na + nc - nb
            {
                return (false, format!("i = {i}: counts ({na}, {nb}, {nc})"));
            }
        }
        (true, "stable with counting identities".into())
    });
    r.check(format!("hecke{n}.decompose-d1"), format!("dims ({}, {})", n + 1, n - 1), || {
        match decompose_d1(n, seed) {
            Ok(rep) => (
                true,
                format!(
                    "dims ({}, {}); {} word traces split",
                    rep.plus_dim, rep.minus_dim, rep.words_checked
                ),
            ),
            Err(e) => (false, e.to_string()),
        }
    });
    r.check(format!("hecke{n}.lambda-independence"), "traces agree for lambda in {1, 2, 5}", || {
        for i in 0..=n {
            match lambda_independence(n, i, &lambdas, seed) {
                Ok(true) => {}
                Ok(false) => return (false, format!("traces differ avoiding s{i}")),
                Err(e) => return (false, e.to_string()),
            }
        }
        (true, "traces agree for lambda in {1, 2, 5}".into())
    });
    r.check(format!("hecke{n}.trace-law"), "full = deleted + n^i t^2k", || {
        for i in 0..=n {
            match trace_law_kind_a(n, i, seed) {
                Ok(true) => {}
                Ok(false) => return (false, format!("law fails avoiding s{i}")),
                Err(e) => return (false, e.to_string()),
            }
        }
        (true, "full = deleted + n^i t^2k".into())
    });
    r.check(format!("hecke{n}.specialize-q1"), "involutions + braid at t = 1", || {
        for tag in ["a", "b", "c", "d"] {
            let (g, m) = match modules.get(tag) {
                Some(pair) => pair,
                None => return (false, "module unavailable".into()),
            };
            if let Err(e) = m.specialize_q1(g) {
                return (false, format!("kind {tag}: {e}"));
            }
        }
        (true, "involutions + braid at t = 1".into())
    });
    r.extend(vrc_identities());
    r
}

// ---- interchange format -------------------------------------------------

/// W-graph interchange: vertices, marks, directed weighted edges.
#[derive(Serialize, Deserialize)]
pub struct WGraphFile {
    pub n: usize,
    pub vertices: Vec<String>,
    pub marks: Vec<Vec<usize>>,
    /// (from y, to x, weight string) meaning mu(y, x).
    pub edges: Vec<(usize, usize, String)>,
}

impl WGraphFile {
    pub fn from_graph(g: &WGraph) -> WGraphFile {
        WGraphFile {
            n: g.n,
            vertices: g.vertices.clone(),
            marks: g.marks.clone(),
            edges: g
                .weights
                .iter()
                .map(|(&(y, x), w)| (y, x, w.to_string()))
                .collect(),
        }
    }

    pub fn into_graph(self) -> Result<WGraph, HeckeError> {
        let mut weights = BTreeMap::new();
        for (y, x, w) in self.edges {
            let w: Scalar = w
                .parse()
                .map_err(|_| HeckeError::BadParams(format!("bad weight for edge ({y},{x})")))?;
            weights.insert((y, x), w);
        }
        Ok(WGraph {
            n: self.n,
            vertices: self.vertices,
            marks: self.marks,
            weights,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_a_n2_relations_hold() {
        let g = wgraph(GraphKind::A, 2, None).unwrap();
        let m = module(&g).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(g.braid_order(0, 1), 4);
        assert_eq!(g.braid_order(1, 2), 4);
        assert_eq!(g.braid_order(0, 2), 2);
    }

    #[test]
    fn kind_c_has_no_edges() {
        let g = wgraph(GraphKind::C, 3, None).unwrap();
        assert!(g.weights.is_empty());
        let m = module(&g).unwrap();
        // T_{s0} v0 = -v0, T_{s0} v3 = t^2 v3.
        assert_eq!(*m.gens[0].at(0, 0), Poly::constant(Scalar::from_int(-1)));
        assert_eq!(*m.gens[0].at(1, 1), t2());
    }

    #[test]
    fn kind_d_relations_for_sampled_lambda() {
        for l in [1i64, 2, 5] {
            let g = wgraph(GraphKind::D, 2, Some(Scalar::from_int(l))).unwrap();
            let m = module(&g).unwrap();
            assert_eq!(m.dim(), 4);
        }
    }

    #[test]
    fn kind_d_weights_as_specified() {
        let g = wgraph(GraphKind::D, 2, Some(Scalar::from_int(3))).unwrap();
        assert_eq!(g.vertices, vec!["v0", "v1", "v2", "v'1"]);
        assert_eq!(g.mu(0, 1), Scalar::from_int(3));
        assert_eq!(g.mu(1, 0), Scalar::from_ratio(1, 3));
    }

    #[test]
    fn omega_works_for_all_kinds() {
        for n in [2usize, 3] {
            for kind in [GraphKind::A, GraphKind::B, GraphKind::C] {
                let g = wgraph(kind, n, None).unwrap();
                let m = module(&g).unwrap();
                omega(kind, &g, &m).unwrap();
            }
            let g = wgraph(GraphKind::D, n, Some(Scalar::from_int(1))).unwrap();
            let m = module(&g).unwrap();
            omega(GraphKind::D, &g, &m).unwrap();
        }
    }

    #[test]
    fn restriction_counts() {
        let n = 3;
        for i in 0..=n {
            let ga = wgraph(GraphKind::A, n, None).unwrap();
            let na = restrict(&module(&ga).unwrap(), &ga, i).unwrap();
            let gb = wgraph(GraphKind::B, n, None).unwrap();
            let nb = restrict(&module(&gb).unwrap(), &gb, i).unwrap();
            let gc = wgraph(GraphKind::C, n, None).unwrap();
            let nc = restrict(&module(&gc).unwrap(), &gc, i).unwrap();
            assert_eq!((na, nb, nc), vertex_counts(n, i));
            // Counting identity: the path count splits across the two pieces.
            assert_eq!(na, nb + nc);
            assert_eq!(2 * na, na + nb + nc);
        }
    }

    #[test]
    fn decompose_d1_n2() {
        let rep = decompose_d1(2, DEFAULT_SEED).unwrap();
        assert_eq!((rep.plus_dim, rep.minus_dim), (3, 1));
    }

    #[test]
    fn lambda_independence_n2() {
        let samples = [
            Scalar::from_int(1),
            Scalar::from_int(2),
            Scalar::from_int(5),
        ];
        for i in 0..=2 {
            assert!(lambda_independence(2, i, &samples, DEFAULT_SEED).unwrap());
        }
    }

    #[test]
    fn trace_law_n2() {
        for i in 0..=2 {
            assert!(trace_law_kind_a(2, i, DEFAULT_SEED).unwrap());
        }
    }

    #[test]
    fn vrc_checks_pass() {
        let r = vrc_identities();
        assert!(r.all_passed());
    }

    #[test]
    fn specialization_at_q1() {
        let g = wgraph(GraphKind::A, 2, None).unwrap();
        let m = module(&g).unwrap();
        m.specialize_q1(&g).unwrap();
    }

    #[test]
    fn wgraph_file_round_trip() {
        let g = wgraph(GraphKind::D, 2, Some(Scalar::from_ratio(2, 3))).unwrap();
        let file = WGraphFile::from_graph(&g);
        let json = serde_json::to_string(&file).unwrap();
        let parsed: WGraphFile = serde_json::from_str(&json).unwrap();
        let g2 = parsed.into_graph().unwrap();
        assert_eq!(g2.vertices, g.vertices);
        assert_eq!(g2.weights, g.weights);
        module(&g2).unwrap();
    }
}

//! Finite group kernel: explicit multiplication tables, centralizers,
//! conjugacy classes, central subgroups, and validated character tables.
//!
//! Elements are opaque indices into the carrier; every group materializes its
//! full multiplication table (orders up to 4096). Characters are class
//! functions with exact scalar values, validated by the orthogonality
//! relations rather than computed by a general-purpose algorithm.

use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub const MAX_ORDER: usize = 4096;
const AXIOM_CHECK_LIMIT: usize = 512;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("element {0} is not in the group (order {1})")]
    ElementNotInGroup(usize, usize),
    #[error("subset is not central: element {0} fails to commute with {1}")]
    NotCentral(usize, usize),
    #[error("subset is not closed under multiplication/inverse")]
    NotASubgroup,
    #[error("group axioms fail: {0}")]
    AxiomsFailed(String),
    #[error("group order {0} exceeds the supported maximum {1}")]
    SizeLimit(usize, usize),
    #[error("no character table available for this group (order {0})")]
    CharacterTableMissing(usize),
    #[error("element order {0} is not representable in the scalar field")]
    UnsupportedElementOrder(usize),
}

/// A finite group presented by its multiplication table. Immutable after
/// construction; all operations are pure.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: mul[a * order + b] = a·b.
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Build from a raw multiplication table, checking the group axioms
    /// exhaustively (orders up to 512) or by spot checks above that.
    pub fn from_mul_table(mul: Vec<usize>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let order = (mul.len() as f64).sqrt().round() as usize;
        if order * order != mul.len() || order == 0 {
            return Err(GroupError::AxiomsFailed(
                "multiplication table is not a nonempty square".into(),
            ));
        }
        if order > MAX_ORDER {
            return Err(GroupError::SizeLimit(order, MAX_ORDER));
        }
        if mul.iter().any(|&v| v >= order) {
            return Err(GroupError::AxiomsFailed("table entry out of range".into()));
        }
        // Locate the two-sided identity.
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul[e * order + a] == a && mul[a * order + e] == a))
            .ok_or_else(|| GroupError::AxiomsFailed("no two-sided identity".into()))?;
        // Inverses: each row must contain the identity exactly once.
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| mul[a * order + b] == identity)
                .ok_or_else(|| GroupError::AxiomsFailed(format!("element {a} has no inverse")))?;
            if mul[b * order + a] != identity {
                return Err(GroupError::AxiomsFailed(format!(
                    "element {a} has only a one-sided inverse"
                )));
            }
            inv[a] = b;
        }
        let names = names.unwrap_or_else(|| (0..order).map(|i| format!("g{i}")).collect());
        if names.len() != order {
            return Err(GroupError::AxiomsFailed("name list length mismatch".into()));
        }
        let g = FiniteGroup {
            order,
            mul,
            identity,
            inv,
            names,
        };
        g.check_associativity()?;
        Ok(g)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        if n <= AXIOM_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::AxiomsFailed(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Light's test would be exhaustive too; for big tables spot-check
            // a deterministic stride instead.
            for a in (0..n).step_by(7) {
                for b in (0..n).step_by(11) {
                    let ab = self.mul(a, b);
                    for c in (0..n).step_by(13) {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::AxiomsFailed(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn conjugate(&self, z: usize, x: usize) -> usize {
        self.mul(self.mul(z, x), self.inv[z])
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Closure of a generating set.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(a) = frontier.pop() {
            for &g in gens {
                for b in [self.mul(a, g), self.mul(a, self.inv[g])] {
                    if !seen[b] {
                        seen[b] = true;
                        frontier.push(b);
                    }
                }
            }
        }
        (0..self.order).filter(|&a| seen[a]).collect()
    }

    /// Subgroup on the given (sorted, deduplicated) subset; returns the
    /// subgroup together with the embedding new index -> parent index.
    pub fn subgroup(&self, subset: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let elems: Vec<usize> = {
            let s: BTreeSet<usize> = subset.iter().copied().collect();
            s.into_iter().collect()
        };
        for &a in &elems {
            if a >= self.order {
                return Err(GroupError::ElementNotInGroup(a, self.order));
            }
        }
        let mut pos = vec![usize::MAX; self.order];
        for (i, &a) in elems.iter().enumerate() {
            pos[a] = i;
        }
        if !elems.contains(&self.identity) {
            return Err(GroupError::NotASubgroup);
        }
        let k = elems.len();
        let mut mul = vec![0usize; k * k];
        for i in 0..k {
            if pos[self.inv[elems[i]]] == usize::MAX {
                return Err(GroupError::NotASubgroup);
            }
            for j in 0..k {
                let p = self.mul(elems[i], elems[j]);
                if pos[p] == usize::MAX {
                    return Err(GroupError::NotASubgroup);
                }
                mul[i * k + j] = pos[p];
            }
        }
        let names = elems.iter().map(|&a| self.names[a].clone()).collect();
        Ok((FiniteGroup::from_mul_table(mul, Some(names))?, elems))
    }

    /// Centralizer of x, as a subgroup sharing the parent multiplication.
    pub fn centralizer(&self, x: usize) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if x >= self.order {
            return Err(GroupError::ElementNotInGroup(x, self.order));
        }
        let subset: Vec<usize> = (0..self.order)
            .filter(|&a| self.mul(a, x) == self.mul(x, a))
            .collect();
        self.subgroup(&subset)
    }

    /// Elements commuting with everything.
    pub fn center_elements(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    pub fn center(&self) -> CentralSubgroup {
        CentralSubgroup {
            elements: self.center_elements(),
        }
    }

    /// Conjugacy classes as disjoint sorted element sets covering the
    /// carrier, ordered by minimal element index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if assigned[x] {
                continue;
            }
            let mut class: BTreeSet<usize> = BTreeSet::new();
            for z in 0..self.order {
                class.insert(self.conjugate(z, x));
            }
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Commutator subgroup [G,G] by closure over all commutators.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let comms: Vec<usize> = (0..self.order)
            .flat_map(|a| {
                (0..self.order).map(move |b| {
                    self.mul(
                        self.mul(a, b),
                        self.mul(self.inv[a], self.inv[b]),
                    )
                })
            })
            .collect();
        self.generated_subgroup(&comms)
    }

    /// Quotient by a normal subgroup; returns the quotient together with the
    /// projection parent element -> coset index.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let nset: BTreeSet<usize> = normal.iter().copied().collect();
        // Normality check.
        for &n in &nset {
            for z in 0..self.order {
                if !nset.contains(&self.conjugate(z, n)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for a in 0..self.order {
            if coset_of[a] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(a);
            for &n in &nset {
                coset_of[self.mul(a, n)] = idx;
            }
        }
        let k = reps.len();
        let mut mul = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                mul[i * k + j] = coset_of[self.mul(reps[i], reps[j])];
            }
        }
        let names = reps.iter().map(|&r| format!("[{}]", self.names[r])).collect();
        Ok((FiniteGroup::from_mul_table(mul, Some(names))?, coset_of))
    }

    // ---- constructors ----------------------------------------------------

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_mul_table(vec![0], Some(vec!["1".into()])).unwrap()
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1 && n <= MAX_ORDER);
        let mut mul = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = (a + b) % n;
            }
        }
        let names = (0..n)
            .map(|i| if i == 0 { "1".into() } else { format!("g^{i}") })
            .collect();
        FiniteGroup::from_mul_table(mul, Some(names)).unwrap()
    }

    /// Dihedral group of order 2n: elements r^i (i < n) then s·r^i.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1 && 2 * n <= MAX_ORDER);
        let m = 2 * n;
        // index = f*n + i  represents  s^f r^i;  (s^f r^i)(s^g r^j):
        // r^i s = s r^{-i}, so s^f r^i s^g r^j = s^{f+g} r^{(-1)^g i + j}.
        let mut mul = vec![0usize; m * m];
        for f in 0..2 {
            for i in 0..n {
                for g in 0..2 {
                    for j in 0..n {
                        let ii = if g == 1 { (n - i) % n } else { i };
                        let idx = ((f + g) % 2) * n + (ii + j) % n;
                        mul[(f * n + i) * m + (g * n + j)] = idx;
                    }
                }
            }
        }
        let names = (0..m)
            .map(|k| {
                let (f, i) = (k / n, k % n);
                match (f, i) {
                    (0, 0) => "1".into(),
                    (0, i) => format!("r^{i}"),
                    (1, 0) => "s".into(),
                    (_, i) => format!("s*r^{i}"),
                }
            })
            .collect();
        FiniteGroup::from_mul_table(mul, Some(names)).unwrap()
    }

    /// Quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion8() -> FiniteGroup {
        // Represent x = (sign, axis) with axis in {1, i, j, k}.
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
        // Product table on axes: (axis, axis) -> (sign, axis).
        let axis_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, b) => (0, b),
                (a, 0) => (0, a),
                (1, 1) | (2, 2) | (3, 3) => (1, 0),
                (1, 2) => (0, 3),
                (2, 1) => (1, 3),
                (2, 3) => (0, 1),
                (3, 2) => (1, 1),
                (3, 1) => (0, 2),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let mut mul = vec![0usize; 64];
        for a in 0..8 {
            for b in 0..8 {
                let (sa, xa) = (a % 2, a / 2);
                let (sb, xb) = (b % 2, b / 2);
                let (sp, xp) = axis_mul(xa, xb);
                mul[a * 8 + b] = xp * 2 + (sa + sb + sp) % 2;
            }
        }
        FiniteGroup::from_mul_table(mul, Some(names.iter().map(|s| s.to_string()).collect()))
            .unwrap()
    }

    /// Symmetric group on {0..n-1}, n <= 4, elements in lexicographic
    /// one-line order.
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!((1..=4).contains(&n));
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for k in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    next.push(q);
                }
            }
            perms = next;
        }
        perms.sort();
        let order = perms.len();
        let index_of = |p: &Vec<usize>| perms.binary_search(p).unwrap();
        let mut mul = vec![0usize; order * order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // (pa ∘ pb)(x) = pa[pb[x]]
                let comp: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
                mul[a * order + b] = index_of(&comp);
            }
        }
        let names = perms
            .iter()
            .map(|p| {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("[{}]", s.join(""))
            })
            .collect();
        FiniteGroup::from_mul_table(mul, Some(names)).unwrap()
    }

    /// Direct product, index = a * |B| + b.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        assert!(n <= MAX_ORDER);
        let mut mul = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                mul[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
            }
        }
        let names = (0..n)
            .map(|x| format!("({},{})", a.names[x / nb], b.names[x % nb]))
            .collect();
        FiniteGroup::from_mul_table(mul, Some(names)).unwrap()
    }
}

/// A central subgroup of some parent group, stored as parent indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSubgroup {
    pub elements: Vec<usize>,
}

impl CentralSubgroup {
    /// Validates centrality and closure against the parent.
    pub fn new(parent: &FiniteGroup, elements: Vec<usize>) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        for &z in &set {
            if z >= parent.order() {
                return Err(GroupError::ElementNotInGroup(z, parent.order()));
            }
            for a in 0..parent.order() {
                if parent.mul(z, a) != parent.mul(a, z) {
                    return Err(GroupError::NotCentral(z, a));
                }
            }
        }
        if !set.contains(&parent.identity()) {
            return Err(GroupError::NotASubgroup);
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(GroupError::NotASubgroup);
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(CentralSubgroup {
            elements: set.into_iter().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// |G / Λ| for a central subgroup Λ.
pub fn quotient_order(g: &FiniteGroup, n: &CentralSubgroup) -> usize {
    debug_assert_eq!(g.order() % n.order(), 0);
    g.order() / n.order()
}

/// A scalar-valued function on a group, constant on conjugacy classes when
/// it is a character. Values are indexed by carrier element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub name: String,
    pub values: Vec<Scalar>,
}

impl ClassFunction {
    pub fn degree(&self, g: &FiniteGroup) -> Scalar {
        self.values[g.identity()].clone()
    }

    pub fn is_class_function(&self, g: &FiniteGroup) -> bool {
        self.values.len() == g.order()
            && (0..g.order()).all(|x| {
                (0..g.order()).all(|z| self.values[g.conjugate(z, x)] == self.values[x])
            })
    }

    /// Standard inner product <f, h> = |G|^-1 sum f(g) conj(h(g)).
    pub fn inner(&self, other: &ClassFunction, g: &FiniteGroup) -> Scalar {
        let mut acc = Scalar::zero();
        for x in 0..g.order() {
            acc = acc + self.values[x].clone() * other.values[x].conj();
        }
        acc * Scalar::from_ratio(1, g.order() as i64)
    }
}

/// First orthogonality + degree completeness; returns failing diagnostics
/// (empty iff the table is a valid complete irreducible character table).
pub fn validate_characters(g: &FiniteGroup, chars: &[ClassFunction]) -> Vec<String> {
    let mut bad = Vec::new();
    for c in chars {
        if !c.is_class_function(g) {
            bad.push(format!("{} is not constant on conjugacy classes", c.name));
        }
    }
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate().skip(i) {
            let ip = a.inner(b, g);
            let expect = if i == j { Scalar::from_int(1) } else { Scalar::zero() };
            if ip != expect {
                bad.push(format!("<{},{}> = {} (expected {})", a.name, b.name, ip, expect));
            }
        }
    }
    let mut deg_sq = Scalar::zero();
    for c in chars {
        let d = c.degree(g);
        deg_sq = deg_sq + d.clone() * d;
    }
    if deg_sq != Scalar::from_int(g.order() as i64) {
        bad.push(format!(
            "sum of squared degrees = {} but |G| = {}",
            deg_sq,
            g.order()
        ));
    }
    bad
}

/// All |G| linear characters of an abelian group, found by enumerating
/// root-of-unity assignments on a greedy generating set and propagating by
/// closure. Deterministic order (sorted by value strings).
pub fn abelian_character_table(g: &FiniteGroup) -> Result<Vec<ClassFunction>, GroupError> {
    assert!(g.is_abelian());
    // Greedy generating sequence.
    let mut gens: Vec<usize> = Vec::new();
    let mut span = g.generated_subgroup(&[]);
    for a in 0..g.order() {
        if !span.contains(&a) {
            gens.push(a);
            span = g.generated_subgroup(&gens);
        }
    }
    let orders: Vec<usize> = gens.iter().map(|&a| g.element_order(a)).collect();
    let roots: Vec<Vec<Scalar>> = orders
        .iter()
        .map(|&n| {
            let z = Scalar::root_of_unity(n as u64)
                .map_err(|_| GroupError::UnsupportedElementOrder(n))?;
            Ok((0..n).map(|k| z.pow(k as u32)).collect())
        })
        .collect::<Result<_, GroupError>>()?;
    let mut table: Vec<Vec<Scalar>> = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        // Try to extend this assignment to a homomorphism by BFS closure.
        if let Some(values) = extend_hom(g, &gens, &assignment, &roots) {
            if !table.contains(&values) {
                table.push(values);
            }
        }
        // Advance the mixed-radix counter.
        let mut k = 0;
        loop {
            if k == gens.len() {
                if table.len() != g.order() {
                    return Err(GroupError::CharacterTableMissing(g.order()));
                }
                let mut named: Vec<ClassFunction> = table
                    .into_iter()
                    .map(|values| ClassFunction {
                        name: String::new(),
                        values,
                    })
                    .collect();
                named.sort_by_key(|c| {
                    c.values.iter().map(|v| v.to_string()).collect::<Vec<_>>()
                });
                for (i, c) in named.iter_mut().enumerate() {
                    c.name = format!("chi{i}");
                }
                return Ok(named);
            }
            assignment[k] += 1;
            if assignment[k] < orders[k] {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

fn extend_hom(
    g: &FiniteGroup,
    gens: &[usize],
    assignment: &[usize],
    roots: &[Vec<Scalar>],
) -> Option<Vec<Scalar>> {
    let mut values: Vec<Option<Scalar>> = vec![None; g.order()];
    values[g.identity()] = Some(Scalar::from_int(1));
    let mut frontier = vec![g.identity()];
    while let Some(a) = frontier.pop() {
        let va = values[a].clone().unwrap();
        for (k, &gen) in gens.iter().enumerate() {
            let b = g.mul(a, gen);
            let vb = va.clone() * roots[k][assignment[k]].clone();
            match &values[b] {
                None => {
                    values[b] = Some(vb);
                    frontier.push(b);
                }
                Some(existing) => {
                    if *existing != vb {
                        return None;
                    }
                }
            }
        }
    }
    // Consistency on every product, not only generator steps.
    let vals: Vec<Scalar> = values.into_iter().map(|v| v.unwrap()).collect();
    for a in 0..g.order() {
        for b in 0..g.order() {
            if vals[g.mul(a, b)] != vals[a].clone() * vals[b].clone() {
                return None;
            }
        }
    }
    Some(vals)
}

/// Full irreducible character table when one is obtainable from finite data:
/// abelian groups by homomorphism enumeration; nonabelian groups whose only
/// nonlinear irreducible is unique (S3, D4, Q8, ...) by completing the
/// pulled-back linear characters with column orthogonality. The result is
/// always validated before being returned.
pub fn character_table(g: &FiniteGroup) -> Result<Vec<ClassFunction>, GroupError> {
    let table = if g.is_abelian() {
        abelian_character_table(g)?
    } else {
        let derived = g.commutator_subgroup();
        let (quot, proj) = g.quotient(&derived)?;
        let linear = abelian_character_table(&quot)?;
        let k = linear.len();
        let classes = g.conjugacy_classes();
        if classes.len() != k + 1 {
            return Err(GroupError::CharacterTableMissing(g.order()));
        }
        let d2 = g.order() - k;
        let d = (d2 as f64).sqrt().round() as usize;
        if d * d != d2 {
            return Err(GroupError::CharacterTableMissing(g.order()));
        }
        let mut table: Vec<ClassFunction> = linear
            .into_iter()
            .map(|c| ClassFunction {
                name: c.name,
                values: (0..g.order()).map(|a| c.values[proj[a]].clone()).collect(),
            })
            .collect();
        // Column orthogonality: for x != 1, sum over ALL irreducibles of
        // chi(x)*conj(chi(1)) vanishes, which pins the last character down.
        let dinv = Scalar::from_ratio(1, d as i64);
        let values: Vec<Scalar> = (0..g.order())
            .map(|x| {
                if x == g.identity() {
                    Scalar::from_int(d as i64)
                } else {
                    let mut s = Scalar::zero();
                    for c in &table {
                        s = s + c.values[x].clone();
                    }
                    -(s * dinv.clone())
                }
            })
            .collect();
        table.push(ClassFunction {
            name: format!("chi{k}"),
            values,
        });
        table
    };
    let bad = validate_characters(g, &table);
    if !bad.is_empty() {
        return Err(GroupError::CharacterTableMissing(g.order()));
    }
    Ok(table)
}

// ---- interchange format ------------------------------------------------

/// On-disk group description: carrier size, row-major multiplication table,
/// optional names, optional character tables with values as scalar strings.
#[derive(Serialize, Deserialize)]
pub struct GroupFile {
    pub size: usize,
    pub table: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub characters: Vec<CharacterFile>,
}

#[derive(Serialize, Deserialize)]
pub struct CharacterFile {
    pub name: String,
    pub values: Vec<String>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup, chars: &[ClassFunction]) -> GroupFile {
        GroupFile {
            size: g.order(),
            table: g.mul.clone(),
            names: Some(g.names.clone()),
            characters: chars
                .iter()
                .map(|c| CharacterFile {
                    name: c.name.clone(),
                    values: c.values.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn into_group(self) -> Result<(FiniteGroup, Vec<ClassFunction>), GroupError> {
        let g = FiniteGroup::from_mul_table(self.table, self.names)?;
        let chars = self
            .characters
            .into_iter()
            .map(|c| {
                let values = c
                    .values
                    .iter()
                    .map(|s| {
                        s.parse::<Scalar>().map_err(|_| {
                            GroupError::AxiomsFailed(format!("bad scalar string {s:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ClassFunction {
                    name: c.name,
                    values,
                })
            })
            .collect::<Result<Vec<_>, GroupError>>()?;
        Ok((g, chars))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_are_valid_and_abelian() {
        for n in 1..=6 {
            let g = FiniteGroup::cyclic(n);
            assert!(g.is_abelian());
            assert_eq!(g.conjugacy_classes().len(), n);
        }
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let g = FiniteGroup::symmetric(3);
        let classes = g.conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 6);
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        // |class| * |centralizer| = |G|
        for class in &classes {
            let (z, _) = g.centralizer(class[0]).unwrap();
            assert_eq!(class.len() * z.order(), g.order());
        }
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let g = FiniteGroup::dihedral(4);
        let (z, _) = g.centralizer(g.identity()).unwrap();
        assert_eq!(z.order(), g.order());
    }

    #[test]
    fn quaternion_structure() {
        let g = FiniteGroup::quaternion8();
        assert_eq!(g.order(), 8);
        // Exactly one element of order 2 (namely -1).
        let invs = (0..8).filter(|&a| g.element_order(a) == 2).count();
        assert_eq!(invs, 1);
        assert_eq!(g.center_elements().len(), 2);
    }

    #[test]
    fn dihedral4_structure() {
        let g = FiniteGroup::dihedral(4);
        // Five involutions: r^2 and the four reflections.
        let invs = (0..8).filter(|&a| g.element_order(a) == 2).count();
        assert_eq!(invs, 5);
        assert_eq!(g.conjugacy_classes().len(), 5);
    }

    #[test]
    fn character_tables_validate() {
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(4),
            FiniteGroup::quaternion8(),
        ] {
            let table = character_table(&g).unwrap();
            assert_eq!(table.len(), g.conjugacy_classes().len());
            assert!(validate_characters(&g, &table).is_empty());
        }
    }

    #[test]
    fn s3_table_has_expected_degrees() {
        let g = FiniteGroup::symmetric(3);
        let table = character_table(&g).unwrap();
        let mut degs: Vec<String> = table.iter().map(|c| c.degree(&g).to_string()).collect();
        degs.sort();
        assert_eq!(degs, vec!["1", "1", "2"]);
    }

    #[test]
    fn central_subgroup_checks() {
        let g = FiniteGroup::quaternion8();
        let lam = CentralSubgroup::new(&g, g.center_elements()).unwrap();
        assert_eq!(lam.order(), 2);
        assert_eq!(quotient_order(&g, &lam), 4);
        // A non-central element is rejected.
        let noncentral = (0..8).find(|&a| !g.center_elements().contains(&a)).unwrap();
        assert!(CentralSubgroup::new(&g, vec![g.identity(), noncentral]).is_err());
    }

    #[test]
    fn quotient_of_q8_by_center_is_klein() {
        let g = FiniteGroup::quaternion8();
        let (q, _) = g.quotient(&g.center_elements()).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert!((0..4).all(|a| q.element_order(a) <= 2));
    }

    #[test]
    fn group_file_round_trip() {
        let g = FiniteGroup::symmetric(3);
        let chars = character_table(&g).unwrap();
        let file = GroupFile::from_group(&g, &chars);
        let json = serde_json::to_string(&file).unwrap();
        let parsed: GroupFile = serde_json::from_str(&json).unwrap();
        let (g2, chars2) = parsed.into_group().unwrap();
        assert_eq!(g2.order(), g.order());
        assert_eq!(chars2, chars);
    }

    #[test]
    fn bad_table_rejected() {
        // Left-cancellation fails: row with a repeat.
        let mul = vec![0, 1, 0, 0];
        assert!(FiniteGroup::from_mul_table(mul, None).is_err());
    }
}

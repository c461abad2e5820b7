//! Homogeneous quasisymmetric functions in the fundamental basis, the
//! Schur, Schur P and Schur Q expansions, exact decomposition into Schur or
//! Schur P functions, shuffle products and evaluation at rational points.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::shapes::{partitions_of, strict_partitions_with_empty, Partition, StrictPartition};
use crate::tableaux::{generate_sst, generate_syt, position_descents, DescentSet};
use crate::{Error, Result};

/// An integer combination of fundamental quasisymmetric functions `F_D`, all
/// of one degree. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSymF {
    n: usize,
    coeffs: BTreeMap<DescentSet, BigInt>,
}

impl QSymF {
    pub fn zero(n: usize) -> Self {
        QSymF { n, coeffs: BTreeMap::new() }
    }

    pub fn fundamental(d: DescentSet) -> Self {
        let mut f = QSymF::zero(d.degree());
        f.coeffs.insert(d, BigInt::one());
        f
    }

    /// `Σ F_D` over a multiset of descent sets of degree `n`.
    pub fn from_descents<I: IntoIterator<Item = DescentSet>>(n: usize, ds: I) -> Result<Self> {
        let mut f = QSymF::zero(n);
        for d in ds {
            f.add_term(d, BigInt::one())?;
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, d: &DescentSet) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing key order.
    pub fn terms(&self) -> impl Iterator<Item = (&DescentSet, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, d: DescentSet, c: BigInt) -> Result<()> {
        if d.degree() != self.n {
            return Err(Error::Inconsistent(format!(
                "term F{d} has degree {} in a degree-{} function",
                d.degree(),
                self.n
            )));
        }
        let entry = self.coeffs.entry(d).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&d);
        }
        Ok(())
    }

    pub fn plus(&self, other: &QSymF) -> Result<QSymF> {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, c.clone())?;
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &BigInt) -> QSymF {
        if c.is_zero() {
            return QSymF::zero(self.n);
        }
        QSymF { n: self.n, coeffs: self.coeffs.iter().map(|(d, x)| (*d, x * c)).collect() }
    }

    /// Product computed term by term with [`shuffle_product`].
    pub fn times(&self, other: &QSymF) -> QSymF {
        let mut out = QSymF::zero(self.n + other.n);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let p = shuffle_product(a, b).scaled(&(x * y));
                out = out.plus(&p).expect("equal degrees");
            }
        }
        out
    }
}

impl fmt::Display for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "+") => {}
                (0, _) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "F{d}")?;
        }
        Ok(())
    }
}

/// `s_λ = Σ_{T ∈ SYT(λ)} F_{Des(T)}`.
pub fn schur_f(shape: &Partition) -> QSymF {
    QSymF::from_descents(shape.size(), generate_syt(shape).iter().map(|t| t.descents()))
        .expect("descent sets have the shape's degree")
}

/// `P_γ = Σ_{S ∈ SST(γ)} F_{Des(S)}`.
pub fn schur_p_f(shape: &StrictPartition) -> QSymF {
    QSymF::from_descents(
        shape.size(),
        generate_sst(shape).iter().map(|s| s.descents().expect("standard tableau")),
    )
    .expect("descent sets have the shape's degree")
}

/// `Q_γ = 2^{ℓ(γ)} P_γ`.
pub fn schur_q_f(shape: &StrictPartition) -> QSymF {
    schur_p_f(shape).scaled(&(BigInt::one() << shape.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Schur,
    SchurP,
}

impl Basis {
    pub fn name(&self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::SchurP => "P",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" | "schur" => Ok(Basis::Schur),
            "P" | "p" | "schurP" | "schur-p" => Ok(Basis::SchurP),
            _ => Err(Error::Parse(format!("unknown basis {s:?}; expected s or P"))),
        }
    }
}

/// Integer coefficients of a function in the Schur or Schur P basis, keyed
/// by (strict) partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, BigInt>,
}

impl BasisExpansion {
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn coefficient(&self, shape: &Partition) -> BigInt {
        self.coeffs.get(shape).cloned().unwrap_or_default()
    }

    /// Terms in decreasing dominance-style order (reverse lexicographic on parts).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (shape, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}")?;
            }
            write!(f, "{}({shape})", self.basis.name())?;
        }
        Ok(())
    }
}

fn basis_functions(basis: Basis, n: usize) -> Vec<(Partition, QSymF)> {
    match basis {
        Basis::Schur => partitions_of(n).into_iter().map(|l| { let f = schur_f(&l); (l, f) }).collect(),
        Basis::SchurP => strict_partitions_with_empty(n)
            .into_iter()
            .map(|g| (g.to_partition(), schur_p_f(&g)))
            .collect(),
    }
}

/// Writes `f` as an integer combination of the chosen basis by exact
/// elimination over the rationals.
pub fn decompose(f: &QSymF, basis: Basis) -> Result<BasisExpansion> {
    let columns = basis_functions(basis, f.degree());
    let rows: Vec<DescentSet> = DescentSet::all(f.degree()).collect();
    let width = columns.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|d| {
            let mut row: Vec<BigRational> =
                columns.iter().map(|(_, g)| BigRational::from_integer(g.coefficient(d))).collect();
            row.push(BigRational::from_integer(f.coefficient(d)));
            row
        })
        .collect();
    let pivots = row_reduce(&mut m, width);
    if pivots.len() < width {
        return Err(Error::Inconsistent(format!(
            "the degree-{} {} functions are linearly dependent",
            f.degree(),
            basis.name()
        )));
    }
    if m[pivots.len()..].iter().any(|row| !row[width].is_zero()) {
        return Err(Error::NotInSpan {
            basis: basis.name(),
            reason: format!("{f} is not a combination of degree-{} {} functions", f.degree(), basis.name()),
        });
    }
    let mut coeffs = BTreeMap::new();
    for (r, &col) in pivots.iter().enumerate() {
        let x = &m[r][width];
        if !x.is_integer() {
            return Err(Error::NotInSpan {
                basis: basis.name(),
                reason: format!("coefficient of {}({}) in {f} is {x}", basis.name(), columns[col].0),
            });
        }
        if !x.is_zero() {
            coeffs.insert(columns[col].0.clone(), x.to_integer());
        }
    }
    Ok(BasisExpansion { basis, coeffs })
}

/// Reduced row echelon form of the first `width` columns, carrying the rest.
/// Returns the pivot column of each leading row.
fn row_reduce(m: &mut [Vec<BigRational>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A permutation of `offset+1 ..= offset+deg` whose ordinary descents are `d`.
fn representative_word(d: &DescentSet, offset: u32) -> Vec<u32> {
    let deg = d.degree();
    let mut runs: Vec<usize> = Vec::new();
    let mut len = 0;
    for j in 1..=deg {
        len += 1;
        if j == deg || d.contains(j) {
            runs.push(len);
            len = 0;
        }
    }
    // earlier runs take larger letters so every run boundary is a descent
    let mut top = offset + deg as u32;
    let mut word = Vec::with_capacity(deg);
    for run in runs {
        let start = top - run as u32 + 1;
        word.extend(start..=top);
        top = start - 1;
    }
    word
}

fn shuffles(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if a.is_empty() || b.is_empty() {
        let len = prefix.len();
        prefix.extend_from_slice(a);
        prefix.extend_from_slice(b);
        visit(prefix);
        prefix.truncate(len);
        return;
    }
    prefix.push(a[0]);
    shuffles(&a[1..], b, prefix, visit);
    prefix.pop();
    prefix.push(b[0]);
    shuffles(a, &b[1..], prefix, visit);
    prefix.pop();
}

/// `F_A F_B` as the sum of `F` over ordinary descents of all shuffles of
/// representative words for `A` and `B`.
pub fn shuffle_product(a: &DescentSet, b: &DescentSet) -> QSymF {
    let alpha = representative_word(a, 0);
    let beta = representative_word(b, a.degree() as u32);
    let mut out = QSymF::zero(a.degree() + b.degree());
    shuffles(&alpha, &beta, &mut Vec::new(), &mut |w| {
        let d = position_descents(w).expect("degree within bounds");
        out.add_term(d, BigInt::one()).expect("matching degree");
    });
    out
}

/// Inverse-style descents (letters `i` right of `i + 1`) of every shuffle;
/// kept to exhibit that this statistic does not give the product.
pub fn shuffle_product_letter_descents(a: &DescentSet, b: &DescentSet) -> QSymF {
    let alpha = representative_word(a, 0);
    let beta = representative_word(b, a.degree() as u32);
    let mut out = QSymF::zero(a.degree() + b.degree());
    shuffles(&alpha, &beta, &mut Vec::new(), &mut |w| {
        let word = crate::tableaux::Word::new(w.to_vec()).expect("distinct letters");
        let d = crate::tableaux::descent_set(&word).expect("permutation");
        out.add_term(d, BigInt::one()).expect("matching degree");
    });
    out
}

/// Evaluates `f` at `x_1, …, x_m = point`, all later variables zero.
pub fn evaluate(f: &QSymF, point: &[BigRational]) -> BigRational {
    let mut total = BigRational::zero();
    for (d, c) in f.terms() {
        total += evaluate_fundamental(d, point) * BigRational::from_integer(c.clone());
    }
    total
}

/// `F_D(point)` by dynamic programming over weakly increasing index
/// sequences that increase strictly after each member of `D`.
pub fn evaluate_fundamental(d: &DescentSet, point: &[BigRational]) -> BigRational {
    let n = d.degree();
    let m = point.len();
    if n == 0 {
        return BigRational::one();
    }
    // ways[v] = weighted sum over sequences ending at variable v
    let mut ways: Vec<BigRational> = point.to_vec();
    for j in 1..n {
        let strict = d.contains(j);
        let mut next = vec![BigRational::zero(); m];
        let mut prefix = BigRational::zero();
        for v in 0..m {
            if !strict {
                prefix += &ways[v];
            }
            next[v] = &prefix * &point[v];
            if strict {
                prefix += &ways[v];
            }
        }
        ways = next;
    }
    ways.into_iter().fold(BigRational::zero(), |acc, x| acc + x)
}

/// Renders a descent set the way expansions print keys, e.g. `F{1,3}`.
pub fn term_name(d: &DescentSet) -> String {
    format!("F{d}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::shapes::{partition, strict, strict_partitions_of};

    fn des(n: usize, m: &[usize]) -> DescentSet {
        DescentSet::new(n, m.iter().copied()).unwrap()
    }

    fn f(n: usize, terms: &[(&[usize], i64)]) -> QSymF {
        let mut out = QSymF::zero(n);
        for (m, c) in terms {
            out.add_term(des(n, m), BigInt::from(*c)).unwrap();
        }
        out
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn schur_expansions() {
        assert_eq!(schur_f(&partition(&[3, 1])), f(4, &[(&[1], 1), (&[2], 1), (&[3], 1)]));
        assert_eq!(schur_f(&partition(&[1])), f(1, &[(&[], 1)]));
        assert_eq!(schur_f(&partition(&[2, 1])), f(3, &[(&[1], 1), (&[2], 1)]));
    }

    #[test]
    fn schur_p_expansions() {
        let p31 = f(4, &[(&[1], 1), (&[2], 2), (&[3], 1), (&[1, 2], 1), (&[1, 3], 2), (&[2, 3], 1)]);
        assert_eq!(schur_p_f(&strict(&[3, 1])), p31);
        assert_eq!(schur_p_f(&strict(&[2])), f(2, &[(&[], 1), (&[1], 1)]));
        assert_eq!(schur_p_f(&strict(&[1])), f(1, &[(&[], 1)]));
        assert_eq!(schur_q_f(&strict(&[2])), f(2, &[(&[], 2), (&[1], 2)]));
        assert_eq!(schur_q_f(&strict(&[3, 1])), p31.scaled(&BigInt::from(4)));
        assert_eq!(p31.to_string(), "F{1} + F{1,2} + 2F{1,3} + 2F{2} + F{2,3} + F{3}");
    }

    #[test]
    fn decompositions() {
        let e = decompose(&schur_p_f(&strict(&[3, 1])), Basis::Schur).unwrap();
        let expected: BTreeMap<Partition, BigInt> = [(&[3, 1][..]), &[2, 2], &[2, 1, 1]]
            .iter()
            .map(|p| (partition(p), BigInt::one()))
            .collect();
        assert_eq!(e.coeffs, expected);
        assert!(decompose(&QSymF::zero(3), Basis::Schur).unwrap().coeffs.is_empty());
        assert!(decompose(&QSymF::zero(3), Basis::SchurP).unwrap().coeffs.is_empty());
        let err = decompose(&f(2, &[(&[], 1)]), Basis::SchurP).unwrap_err();
        assert!(matches!(err, Error::NotInSpan { .. }), "{err}");
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle_product(&des(2, &[1]), &des(1, &[])), f(3, &[(&[1], 1), (&[2], 1), (&[1, 2], 1)]));
        assert_eq!(shuffle_product(&des(1, &[]), &des(1, &[])), f(2, &[(&[], 1), (&[1], 1)]));
        assert_eq!(shuffle_product(&des(3, &[]), &des(0, &[])), f(3, &[(&[], 1)]));
        // the letter-descent statistic gets this product wrong
        assert_eq!(
            shuffle_product_letter_descents(&des(2, &[1]), &des(1, &[])),
            f(3, &[(&[1], 2), (&[1, 2], 1)])
        );
    }

    #[test]
    fn evaluation_examples() {
        let ones = [q(1, 1), q(1, 1)];
        assert_eq!(evaluate(&f(2, &[(&[], 1)]), &ones), q(3, 1));
        assert_eq!(evaluate(&f(2, &[(&[1], 1)]), &ones), q(1, 1));
        let zeros = [q(0, 1), q(0, 1), q(0, 1)];
        assert!(evaluate(&schur_p_f(&strict(&[3, 1])), &zeros).is_zero());
    }

    #[test]
    fn evaluation_matches_brute_force() {
        fn brute(d: &DescentSet, point: &[BigRational]) -> BigRational {
            fn rec(d: &DescentSet, point: &[BigRational], j: usize, lo: usize, acc: BigRational) -> BigRational {
                if j > d.degree() {
                    return acc;
                }
                let start = if j > 1 && d.contains(j - 1) { lo + 1 } else { lo };
                (start..point.len()).fold(BigRational::zero(), |s, v| s + rec(d, point, j + 1, v, &acc * &point[v]))
            }
            rec(d, point, 1, 0, BigRational::one())
        }
        let point = [q(1, 2), q(2, 3), q(3, 1)];
        for n in 0..=5 {
            for d in DescentSet::all(n) {
                assert_eq!(evaluate_fundamental(&d, &point), brute(&d, &point), "{d}");
            }
        }
    }

    #[test]
    fn schur_p_is_symmetric_at_three_variables() {
        let p = [q(1, 2), q(2, 3), q(5, 7)];
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for n in 1..=6 {
            for g in strict_partitions_of(n).unwrap() {
                let h = schur_p_f(&g);
                let base = evaluate(&h, &p);
                for perm in perms {
                    let pt: Vec<BigRational> = perm.iter().map(|&i| p[i].clone()).collect();
                    assert_eq!(evaluate(&h, &pt), base, "{g}");
                }
            }
        }
    }

    #[test]
    fn shuffles_agree_with_evaluation() {
        let points = [[q(1, 2), q(2, 3), q(3, 1)], [q(-1, 3), q(5, 2), q(7, 5)], [q(2, 1), q(1, 7), q(-3, 4)]];
        for total in 0..=6 {
            for a in 0..=total {
                for da in DescentSet::all(a) {
                    for db in DescentSet::all(total - a) {
                        let prod = shuffle_product(&da, &db);
                        for p in &points {
                            let lhs = evaluate(&prod, p);
                            let rhs = evaluate_fundamental(&da, p) * evaluate_fundamental(&db, p);
                            assert_eq!(lhs, rhs, "{da} * {db}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(QSymF::zero(2).to_string(), "0");
        assert_eq!(f(2, &[(&[], 1), (&[1], -2)]).to_string(), "F{} - 2F{1}");
        let e = decompose(&schur_p_f(&strict(&[3, 1])), Basis::Schur).unwrap();
        assert_eq!(e.to_string(), "s(3,1) + s(2,2) + s(2,1,1)");
    }
}

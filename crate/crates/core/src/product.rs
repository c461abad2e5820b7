//! Products of Schur P functions through concatenated shapes: the
//! F-expansion of `P_γ P_δ`, structure constants read off the queer
//! equivalence classes, and Schur coefficients of `P_γ` read off the dual
//! equivalence classes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::axioms::{classify_schur_class, schur_targets, Classifier};
use crate::degraph::{components, concat_graph, sst_graph, Label};
use crate::qsym::{schur_p_f, Basis, BasisExpansion, QSymF};
use crate::shapes::StrictPartition;
use crate::tableaux::{generate_concat, generate_sst};
use crate::{Error, Result};

/// `Σ F_{Des(S⊗T)}` over `SST(γ ⊗ δ)`.
pub fn product_f(left: &StrictPartition, right: &StrictPartition) -> QSymF {
    let n = left.size() + right.size();
    QSymF::from_descents(n, generate_concat(left, right).iter().map(|t| t.descents()))
        .expect("descent sets have degree n")
}

/// Structure constants `f_{γ,δ}^ε` with `P_γ P_δ = Σ_ε f_{γ,δ}^ε P_ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    pub left: StrictPartition,
    pub right: StrictPartition,
    pub entries: BTreeMap<StrictPartition, u64>,
}

impl StructureTable {
    pub fn get(&self, eps: &StrictPartition) -> u64 {
        self.entries.get(eps).copied().unwrap_or(0)
    }

    /// `Σ_ε f·P_ε` as an F-expansion.
    pub fn expansion(&self) -> QSymF {
        let n = self.left.size() + self.right.size();
        self.entries.iter().fold(QSymF::zero(n), |acc, (eps, &c)| {
            acc.plus(&schur_p_f(eps).scaled(&BigInt::from(c))).expect("degree n")
        })
    }

    /// `Σ_ε f·|SST(ε)|`, which must equal `|SST(γ ⊗ δ)|`.
    pub fn weighted_count(&self) -> u64 {
        self.entries.iter().map(|(eps, &c)| c * generate_sst(eps).len() as u64).sum()
    }

    /// Entries in decreasing order of `ε`.
    pub fn terms(&self) -> impl Iterator<Item = (&StrictPartition, u64)> {
        self.entries.iter().rev().map(|(e, &c)| (e, c))
    }

    pub fn as_expansion(&self) -> BasisExpansion {
        BasisExpansion {
            basis: Basis::SchurP,
            coeffs: self.entries.iter().map(|(e, &c)| (e.to_partition(), BigInt::from(c))).collect(),
        }
    }
}

impl fmt::Display for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({})·P({}) = ", self.left, self.right)?;
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (k, (eps, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "P({eps})")?;
        }
        Ok(())
    }
}

/// Tallies the classified components of the queer graph on `SST(γ ⊗ δ)`.
pub fn structure_constants(left: &StrictPartition, right: &StrictPartition) -> Result<StructureTable> {
    let g = concat_graph(left, right, true)?;
    let labels: Vec<Label> = g.labels().iter().copied().collect();
    let classifier = Classifier::new(g.degree());
    let mut entries = BTreeMap::new();
    for class in components(&g, &labels)? {
        *entries.entry(classifier.classify(&class, &g)?).or_insert(0) += 1;
    }
    Ok(StructureTable { left: left.clone(), right: right.clone(), entries })
}

/// `g_{γ,λ}` with `P_γ = Σ_λ g_{γ,λ} s_λ`, from the dual equivalence classes of `SST(γ)`.
pub fn schur_coeffs_of_p(shape: &StrictPartition) -> Result<BasisExpansion> {
    let g = sst_graph(shape, false)?;
    let labels: Vec<Label> = g.labels().iter().copied().collect();
    let targets = schur_targets(shape.size());
    let mut coeffs: BTreeMap<_, BigInt> = BTreeMap::new();
    for class in components(&g, &labels)? {
        let l = classify_schur_class(&class, &g, &targets)
            .map_err(|e| Error::Inconsistent(format!("SST({shape}): {e}")))?;
        *coeffs.entry(l).or_default() += 1;
    }
    Ok(BasisExpansion { basis: Basis::Schur, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::qsym::decompose;
    use crate::shapes::{partition, strict, strict_partitions_with_empty};
    use crate::tableaux::DescentSet;

    fn des(n: usize, m: &[usize]) -> DescentSet {
        DescentSet::new(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn product_expansions() {
        let mut p31 = QSymF::zero(4);
        for (m, c) in [(&[1][..], 1), (&[2], 2), (&[3], 1), (&[1, 2], 1), (&[1, 3], 2), (&[2, 3], 1)] {
            p31.add_term(des(4, m), BigInt::from(c)).unwrap();
        }
        assert_eq!(product_f(&strict(&[2, 1]), &strict(&[1])), p31);
        let mut p11 = QSymF::zero(2);
        p11.add_term(des(2, &[]), 1.into()).unwrap();
        p11.add_term(des(2, &[1]), 1.into()).unwrap();
        assert_eq!(product_f(&strict(&[1]), &strict(&[1])), p11);
        assert_eq!(product_f(&strict(&[1]), &StrictPartition::empty()), schur_p_f(&strict(&[1])));
    }

    #[test]
    fn structure_constant_examples() {
        let t = structure_constants(&strict(&[2, 1]), &strict(&[1])).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(strict(&[3, 1]), 1)]));
        let t = structure_constants(&strict(&[2]), &strict(&[2])).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(strict(&[4]), 1), (strict(&[3, 1]), 2)]));
        let t = structure_constants(&strict(&[1]), &strict(&[1])).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(strict(&[2]), 1)]));
        assert_eq!(t.to_string(), "P(1)·P(1) = P(2)");
    }

    #[test]
    fn schur_coefficients() {
        let e = schur_coeffs_of_p(&strict(&[3, 1])).unwrap();
        assert_eq!(e.to_string(), "s(3,1) + s(2,2) + s(2,1,1)");
        let e = schur_coeffs_of_p(&strict(&[1])).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(partition(&[1]), BigInt::from(1))]));
        let e = schur_coeffs_of_p(&strict(&[2])).unwrap();
        assert_eq!(e.to_string(), "s(2) + s(1,1)");
    }

    #[test]
    fn tallies_agree_with_decomposition() {
        for a in 0..=4 {
            for b in 0..=(5 - a) {
                for g in strict_partitions_with_empty(a) {
                    for d in strict_partitions_with_empty(b) {
                        if a + b == 0 {
                            continue;
                        }
                        let t = structure_constants(&g, &d).unwrap();
                        let f = product_f(&g, &d);
                        assert_eq!(t.expansion(), f, "{g} {d}");
                        assert_eq!(decompose(&f, Basis::SchurP).unwrap(), t.as_expansion());
                        assert_eq!(t.weighted_count(), generate_concat(&g, &d).len() as u64);
                    }
                }
            }
        }
    }
}

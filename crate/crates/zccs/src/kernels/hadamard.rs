//! Families of sequences that are mutually orthogonal to conjugate, the
//! Sylvester Hadamard rows being the stock binary source.

use crate::corr::accs;
use crate::error::{Error, Result};
use crate::seq::PhaseSequence;

/// r sequences of a common length with pairwise zero conjugate inner
/// product at shift 0.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalFamily {
    members: Vec<PhaseSequence>,
}

impl OrthogonalFamily {
    /// Validate lengths and the pairwise orthogonality condition.
    pub fn new(members: Vec<PhaseSequence>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Dimension("family needs at least one member".into()));
        }
        let fam = Self { members };
        if !check_orthogonal_family(&fam)? {
            return Err(Error::Domain(
                "family members are not mutually orthogonal to conjugate".into(),
            ));
        }
        Ok(fam)
    }

    pub fn members(&self) -> &[PhaseSequence] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn member_len(&self) -> usize {
        self.members[0].len()
    }
}

/// True iff all distinct pairs have zero conjugate inner product at shift 0.
/// Errors on ragged member lengths.
pub fn check_orthogonal_family(fam: &OrthogonalFamily) -> Result<bool> {
    let members = &fam.members;
    let p = members[0].len();
    for (i, m) in members.iter().enumerate() {
        if m.len() != p {
            return Err(Error::Dimension(format!(
                "family member {i} has length {} but member 0 has {p}",
                m.len()
            )));
        }
    }
    let eps = 1e-10 * p as f64;
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let inner = accs(&members[i], &members[j], 0)?;
            if !inner.is_zero(eps) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rows of the Sylvester Hadamard matrix of size P (a power of two) as a
/// binary orthogonal family.
pub fn hadamard(p: usize) -> Result<OrthogonalFamily> {
    if p == 0 || !p.is_power_of_two() {
        return Err(Error::Domain(format!(
            "Sylvester construction needs a power-of-two size, got {p}; \
             supply other sizes as an explicit matrix"
        )));
    }
    let mut rows: Vec<Vec<i8>> = vec![vec![1]];
    while rows[0].len() < p {
        let mut next = Vec::with_capacity(rows.len() * 2);
        for r in &rows {
            let mut top: Vec<i8> = r.clone();
            top.extend(r.iter().copied());
            next.push(top);
        }
        for r in &rows {
            let mut bottom: Vec<i8> = r.clone();
            bottom.extend(r.iter().map(|&x| -x));
            next.push(bottom);
        }
        rows = next;
    }
    let members = rows
        .iter()
        .map(|r| PhaseSequence::from_signs(r))
        .collect::<Result<Vec<_>>>()?;
    OrthogonalFamily::new(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_2() {
        let fam = hadamard(2).unwrap();
        assert_eq!(fam.members()[0].signs().unwrap(), vec![1, 1]);
        assert_eq!(fam.members()[1].signs().unwrap(), vec![1, -1]);
    }

    #[test]
    fn sylvester_8_pairwise_orthogonal() {
        let fam = hadamard(8).unwrap();
        assert_eq!(fam.size(), 8);
        assert!(check_orthogonal_family(&fam).unwrap());
    }

    #[test]
    fn sylvester_1_single_row() {
        let fam = hadamard(1).unwrap();
        assert_eq!(fam.size(), 1);
        assert!(check_orthogonal_family(&fam).unwrap());
    }

    #[test]
    fn non_power_of_two_rejected() {
        assert!(hadamard(6).is_err());
        assert!(hadamard(0).is_err());
    }

    #[test]
    fn duplicate_rows_fail_check() {
        let a = PhaseSequence::from_signs(&[1, 1]).unwrap();
        assert!(OrthogonalFamily::new(vec![a.clone(), a]).is_err());
    }

    #[test]
    fn ragged_family_is_dimension_error() {
        let fam = OrthogonalFamily {
            members: vec![
                PhaseSequence::from_signs(&[1, 1]).unwrap(),
                PhaseSequence::from_signs(&[1, 1, -1]).unwrap(),
            ],
        };
        assert!(check_orthogonal_family(&fam).is_err());
    }
}

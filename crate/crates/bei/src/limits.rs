//! Growth of `c`, `deg h` and `n - 2` along the joins `P_m * K_t`, from the
//! closed-form h-polynomial only.

use bei_core::algebra::join_h_polynomial_closed_form;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fraction(pub Ratio<u64>);

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitRow {
    pub t: usize,
    pub c: usize,
    pub deg_h: usize,
    pub n_minus_2: usize,
    pub c_over_deg_h: Fraction,
    pub c_over_n_minus_2: Fraction,
}

/// Rows `t = 1..=t_max` for `P_m * K_t`: `c = m - 1`, `deg h` read off the
/// closed form, `n - 2 = m + t - 2`.
pub fn joint_limit_table(m: usize, t_max: usize) -> Result<Vec<LimitRow>> {
    if t_max == 0 {
        return Err(bei_core::Error::Params("t_max must be at least 1".into()).into());
    }
    (1..=t_max)
        .map(|t| {
            let h = join_h_polynomial_closed_form(m, t)?;
            let c = m - 1;
            let deg_h = h.degree();
            let n_minus_2 = m + t - 2;
            Ok(LimitRow {
                t,
                c,
                deg_h,
                n_minus_2,
                c_over_deg_h: Fraction(Ratio::new(c as u64, deg_h as u64)),
                c_over_n_minus_2: Fraction(Ratio::new(c as u64, n_minus_2 as u64)),
            })
        })
        .collect()
}

/// Whether both ratio columns strictly decrease down the table.
pub fn ratios_strictly_decreasing(rows: &[LimitRow]) -> bool {
    rows.windows(2).all(|w| {
        w[1].c_over_deg_h.0 < w[0].c_over_deg_h.0
            && w[1].c_over_n_minus_2.0 < w[0].c_over_n_minus_2.0
    })
}

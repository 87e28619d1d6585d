//! Classification of a parameter tuple into its solution regime.
//!
//! For the TO picture the taxonomy splits on `a` (Case 1: `a = 1`, Case 2:
//! otherwise) and then on `b` against the critical boundary `b = a - 2`
//! (`b = -1` in Case 1). On the boundary, Case 2 further splits on `t0`
//! against `|1-a|/(2w)` and on the sign of `1 - a`. The TM and TQ pictures
//! share one taxonomy with `a = 0` excluded (there the picture maps are the
//! identity) and the single boundary key `{1;-1}`.
//!
//! Boundary comparisons are resolved with a configurable relative epsilon so
//! that near-critical parameters deterministically select the critical
//! closed forms instead of the blowing-up Bessel orders.

use serde::Serialize;

use crate::params::{Params, CLASS_EPSILON};
use crate::{Error, Result};

/// Which of the three equivalent Schrödinger pictures is being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Picture {
    /// Time-dependent oscillator: unit mass, spring coefficient `2 g2(t')`.
    To,
    /// Time-dependent mass: the defining Hamiltonian.
    Tm,
    /// Time-dependent quadratic: unit mass plus the `(a/2t) D` drag.
    Tq,
}

impl Picture {
    pub fn label(self) -> &'static str {
        match self {
            Picture::To => "TO",
            Picture::Tm => "TM",
            Picture::Tq => "TQ",
        }
    }
}

impl std::str::FromStr for Picture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "to" => Ok(Picture::To),
            "tm" => Ok(Picture::Tm),
            "tq" => Ok(Picture::Tq),
            other => Err(Error::InvalidParams(format!("unknown picture '{other}'"))),
        }
    }
}

/// Case 1 is `a = 1` (logarithmic time map), Case 2 everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Case {
    One,
    Two,
}

/// Position of `b` relative to the critical boundary `a - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BClass {
    /// `b > a - 2` (`b + 1 > 0` in Case 1): Hankel row with order `1/q`.
    Above,
    /// `b < a - 2`: conjugated Hankel row.
    Below,
    /// `b = a - 2`: power/log/trig-in-log rows.
    Critical,
}

/// Critical subclass: `t0` against `|1-a|/(2w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Subclass {
    TLt,
    TEq,
    TGt,
}

/// Sign of `1 - a`, selecting a branch of the critical rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignTag {
    Plus,
    Minus,
}

/// A resolved regime label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SystemKey {
    pub picture: Picture,
    pub case: Case,
    pub class: BClass,
    /// Present only for critical Case-2 regimes.
    pub subclass: Option<Subclass>,
    /// Present only for critical Case-2 regimes.
    pub sign_tag: Option<SignTag>,
}

/// Valid range of the TO time offset `t' - t0'` (image of `t >= t0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeDomain {
    pub lower: f64,
    /// `f64::INFINITY` encodes an unbounded interval.
    pub upper: f64,
    pub open_upper: bool,
}

impl TimeDomain {
    pub fn contains(&self, offset: f64) -> bool {
        if offset < self.lower {
            return false;
        }
        if self.open_upper {
            offset < self.upper
        } else {
            offset <= self.upper
        }
    }
}

/// Classify with the default boundary epsilon.
pub fn classify(p: &Params, picture: Picture) -> Result<SystemKey> {
    classify_with_epsilon(p, picture, CLASS_EPSILON)
}

/// Classify with an explicit relative boundary epsilon.
pub fn classify_with_epsilon(p: &Params, picture: Picture, eps: f64) -> Result<SystemKey> {
    Params::new(p.a, p.b, p.omega, p.t_o)?;
    let unit_a = (p.a - 1.0).abs() <= eps * 1.0f64.max(p.a.abs());
    let zero_a = p.a.abs() <= eps;
    if zero_a && picture != Picture::To {
        return Err(Error::IdentityMap);
    }
    let case = if unit_a { Case::One } else { Case::Two };
    let boundary = p.a - 2.0;
    let scale = 1.0f64.max(p.b.abs()).max(boundary.abs());
    let class = if (p.b - boundary).abs() <= eps * scale {
        BClass::Critical
    } else if p.b > boundary {
        BClass::Above
    } else {
        BClass::Below
    };
    let (subclass, sign_tag) = if class == BClass::Critical && !unit_a {
        let threshold = (1.0 - p.a).abs() / (2.0 * p.omega);
        let s = 1.0f64.max(p.t_o).max(threshold);
        let sub = if (p.t_o - threshold).abs() <= eps * s {
            Subclass::TEq
        } else if p.t_o < threshold {
            Subclass::TLt
        } else {
            Subclass::TGt
        };
        let tag = if 1.0 - p.a > 0.0 { SignTag::Plus } else { SignTag::Minus };
        (Some(sub), Some(tag))
    } else {
        (None, None)
    };
    Ok(SystemKey { picture, case, class, subclass, sign_tag })
}

impl SystemKey {
    /// The regime key in the `{a;b;...}` notation, e.g. `{1;-1}`,
    /// `{!=0;(a-2,inf)}`, `{!=1;a-2;t_o>|1-a|/2w;-}`.
    pub fn key_string(&self) -> String {
        let head = match (self.picture, self.case) {
            (Picture::To, Case::One) => "1",
            (Picture::To, Case::Two) => "!=1",
            (_, Case::One) => {
                // TM/TQ: only the critical a=1 row is labeled with a=1
                if self.class == BClass::Critical {
                    "1"
                } else {
                    "!=0"
                }
            }
            (_, Case::Two) => {
                if self.class == BClass::Critical {
                    "!=0,1"
                } else {
                    "!=0"
                }
            }
        };
        match self.class {
            BClass::Above => {
                if self.picture == Picture::To && self.case == Case::One {
                    format!("{{{head};(-1,inf)}}")
                } else {
                    format!("{{{head};(a-2,inf)}}")
                }
            }
            BClass::Below => {
                if self.picture == Picture::To && self.case == Case::One {
                    format!("{{{head};(-inf,-1)}}")
                } else {
                    format!("{{{head};(-inf,a-2)}}")
                }
            }
            BClass::Critical => match (self.subclass, self.sign_tag) {
                (Some(sub), Some(tag)) => {
                    let rel = match sub {
                        Subclass::TLt => "<",
                        Subclass::TEq => "=",
                        Subclass::TGt => ">",
                    };
                    let sign = match tag {
                        SignTag::Plus => "+",
                        SignTag::Minus => "-",
                    };
                    format!("{{{head};a-2;t_o{rel}|1-a|/2w;{sign}}}")
                }
                _ => "{1;-1}".to_string(),
            },
        }
    }

    /// Human-oriented one-line report, e.g. `TM{a=3;b=1;crit;t_o>|1-a|/2w;-}`.
    pub fn report_string(&self, p: &Params) -> String {
        let pic = self.picture.label();
        let (a, b) = (p.a, p.b);
        match self.class {
            BClass::Above => {
                if self.case == Case::One {
                    format!("{pic}{{a={a};b={b};b>-1}}")
                } else {
                    format!("{pic}{{a={a};b={b};b>a-2}}")
                }
            }
            BClass::Below => {
                if self.case == Case::One {
                    format!("{pic}{{a={a};b={b};b<-1}}")
                } else {
                    format!("{pic}{{a={a};b={b};b<a-2}}")
                }
            }
            BClass::Critical => match (self.subclass, self.sign_tag) {
                (Some(sub), Some(tag)) => {
                    let rel = match sub {
                        Subclass::TLt => "<",
                        Subclass::TEq => "=",
                        Subclass::TGt => ">",
                    };
                    let sign = match tag {
                        SignTag::Plus => "+",
                        SignTag::Minus => "-",
                    };
                    format!("{pic}{{a={a};b={b};crit;t_o{rel}|1-a|/2w;{sign}}}")
                }
                _ => format!("{pic}{{a={a};b={b};crit}}"),
            },
        }
    }
}

/// Valid TO time offsets: `[0, inf)` for `a <= 1`, and the bounded interval
/// `[0, t0/(a-1))` for `a > 1` (the scaled time `v = 1 + (1-a)(t'-t0')/t0`
/// must stay positive).
pub fn tprime_domain(p: &Params) -> Result<TimeDomain> {
    Params::new(p.a, p.b, p.omega, p.t_o)?;
    if p.a > 1.0 && !p.is_unit_a() {
        Ok(TimeDomain { lower: 0.0, upper: p.t_o / (p.a - 1.0), open_upper: true })
    } else {
        Ok(TimeDomain { lower: 0.0, upper: f64::INFINITY, open_upper: true })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, omega: f64, t_o: f64) -> Params {
        Params::new(a, b, omega, t_o).unwrap()
    }

    #[test]
    fn case1_classes() {
        let k = classify(&p(1.0, 0.5, 2.0, 1.0), Picture::To).unwrap();
        assert_eq!(k.case, Case::One);
        assert_eq!(k.class, BClass::Above);
        assert_eq!(k.key_string(), "{1;(-1,inf)}");

        let k = classify(&p(1.0, -1.0, 1.0, 1.0), Picture::To).unwrap();
        assert_eq!(k.class, BClass::Critical);
        assert_eq!(k.subclass, None);
        assert_eq!(k.key_string(), "{1;-1}");

        let k = classify(&p(1.0, -3.0, 1.0, 1.0), Picture::To).unwrap();
        assert_eq!(k.class, BClass::Below);
        assert_eq!(k.key_string(), "{1;(-inf,-1)}");
    }

    #[test]
    fn critical_subclasses() {
        // a=3, b=1, w=2, t0=1: critical, t_o=1 > |1-3|/(2*2)=0.5, sign(1-a)=-
        let k = classify(&p(3.0, 1.0, 2.0, 1.0), Picture::Tm).unwrap();
        assert_eq!(k.class, BClass::Critical);
        assert_eq!(k.subclass, Some(Subclass::TGt));
        assert_eq!(k.sign_tag, Some(SignTag::Minus));
        assert_eq!(k.key_string(), "{!=0,1;a-2;t_o>|1-a|/2w;-}");
        assert_eq!(k.report_string(&p(3.0, 1.0, 2.0, 1.0)), "TM{a=3;b=1;crit;t_o>|1-a|/2w;-}");

        // a=0.5, b=-1.5, w=0.2: |1-a|/(2w) = 1.25 > t_o=1, sign +
        let k = classify(&p(0.5, -1.5, 0.2, 1.0), Picture::To).unwrap();
        assert_eq!(k.subclass, Some(Subclass::TLt));
        assert_eq!(k.sign_tag, Some(SignTag::Plus));

        // exact boundary t_o = |1-a|/(2w)
        let k = classify(&p(3.0, 1.0, 1.0, 1.0), Picture::Tq).unwrap();
        assert_eq!(k.subclass, Some(Subclass::TEq));
    }

    #[test]
    fn tm_tq_reject_zero_a() {
        assert_eq!(classify(&p(0.0, 1.0, 1.0, 1.0), Picture::Tm), Err(Error::IdentityMap));
        assert_eq!(classify(&p(0.0, 1.0, 1.0, 1.0), Picture::Tq), Err(Error::IdentityMap));
        // TO accepts a=0 and routes it through Case 2
        let k = classify(&p(0.0, 1.0, 1.0, 1.0), Picture::To).unwrap();
        assert_eq!(k.case, Case::Two);
        assert_eq!(k.class, BClass::Above);
    }

    #[test]
    fn tm_key_strings() {
        assert_eq!(classify(&p(1.0, -1.0, 1.0, 1.0), Picture::Tm).unwrap().key_string(), "{1;-1}");
        assert_eq!(
            classify(&p(2.0, 1.0, 1.0, 1.0), Picture::Tm).unwrap().key_string(),
            "{!=0;(a-2,inf)}"
        );
        assert_eq!(
            classify(&p(1.0, 1.0, 1.0, 1.0), Picture::Tq).unwrap().key_string(),
            "{!=0;(a-2,inf)}"
        );
        assert_eq!(
            classify(&p(0.5, -2.0, 1.0, 1.0), Picture::Tm).unwrap().key_string(),
            "{!=0;(-inf,a-2)}"
        );
    }

    #[test]
    fn domains() {
        let d = tprime_domain(&p(1.0, 0.0, 1.0, 1.0)).unwrap();
        assert_eq!(d.lower, 0.0);
        assert!(d.upper.is_infinite());

        let d = tprime_domain(&p(3.0, 1.0, 2.0, 1.0)).unwrap();
        assert_eq!(d.upper, 0.5);
        assert!(d.open_upper);
        assert!(d.contains(0.49));
        assert!(!d.contains(0.5));
        assert!(!d.contains(-0.1));

        let d = tprime_domain(&p(0.5, 0.0, 1.0, 1.0)).unwrap();
        assert!(d.upper.is_infinite());
    }

    #[test]
    fn near_boundary_snaps_to_critical() {
        // b within 1e-13 of a-2 must classify as critical (the Hankel order
        // 1/q would otherwise blow past the supported range)
        let k = classify(&p(3.0, 1.0 + 1e-13, 2.0, 1.0), Picture::Tm).unwrap();
        assert_eq!(k.class, BClass::Critical);
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::{GwError, SquareClass};

/// A nonnegative combination of rank-one forms and hyperbolic planes,
/// kept in reduced canonical shape: no `<a>`, `<-a>` pair survives (each such
/// pair is folded into `h`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GWForm {
    classes: BTreeMap<SquareClass, u64>,
    hyper: u64,
}

impl GWForm {
    pub fn zero() -> Self {
        GWForm { classes: BTreeMap::new(), hyper: 0 }
    }

    pub fn one() -> Self {
        GWForm::from_class(SquareClass::one())
    }

    pub fn from_class(c: SquareClass) -> Self {
        let mut classes = BTreeMap::new();
        classes.insert(c, 1);
        GWForm { classes, hyper: 0 }
    }

    pub fn hyperbolic(n: u64) -> Self {
        GWForm { classes: BTreeMap::new(), hyper: n }
    }

    pub fn from_classes<I: IntoIterator<Item = SquareClass>>(iter: I) -> Self {
        let mut classes: BTreeMap<SquareClass, u64> = BTreeMap::new();
        for c in iter {
            *classes.entry(c).or_insert(0) += 1;
        }
        let mut out = GWForm { classes, hyper: 0 };
        out.reduce();
        out
    }

    /// `<a> + <-a> = h`, applied until no opposite pair remains.
    fn reduce(&mut self) {
        let keys: Vec<SquareClass> = self.classes.keys().cloned().collect();
        for c in keys {
            if c.sign() < 0 {
                continue; // handle each pair once, from its positive member
            }
            let n_pos = self.classes.get(&c).copied().unwrap_or(0);
            let neg = c.neg();
            let n_neg = self.classes.get(&neg).copied().unwrap_or(0);
            let k = n_pos.min(n_neg);
            if k > 0 {
                self.hyper += k;
                set_mult(&mut self.classes, &c, n_pos - k);
                set_mult(&mut self.classes, &neg, n_neg - k);
            }
        }
    }

    pub fn classes(&self) -> impl Iterator<Item = (&SquareClass, u64)> {
        self.classes.iter().map(|(c, &n)| (c, n))
    }

    pub fn hyper(&self) -> u64 {
        self.hyper
    }

    pub fn rank(&self) -> u64 {
        self.class_count() + 2 * self.hyper
    }

    fn class_count(&self) -> u64 {
        self.classes.values().sum()
    }

    /// Signature over a real closure: counts signs of rational classes.
    /// Errors if any symbolic atom is present.
    pub fn signature(&self) -> Result<i64, GwError> {
        let mut sig: i64 = 0;
        for (c, n) in &self.classes {
            if !c.is_rational() {
                return Err(GwError::IndeterminateSignature);
            }
            sig += c.sign() as i64 * *n as i64;
        }
        Ok(sig)
    }

    /// Representative of the image in the Witt ring W(k) = GW(k)/Z.h:
    /// the anisotropic class part, with the hyperbolic summand dropped.
    pub fn witt_image(&self) -> GWForm {
        GWForm { classes: self.classes.clone(), hyper: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty() && self.hyper == 0
    }

    /// n-fold sum of the form with itself.
    pub fn times(&self, n: u64) -> GWForm {
        let mut classes = self.classes.clone();
        for v in classes.values_mut() {
            *v *= n;
        }
        if n == 0 {
            classes.clear();
        }
        GWForm { classes, hyper: self.hyper * n }
    }
}

fn set_mult(map: &mut BTreeMap<SquareClass, u64>, key: &SquareClass, n: u64) {
    if n == 0 {
        map.remove(key);
    } else {
        map.insert(key.clone(), n);
    }
}

impl Add for &GWForm {
    type Output = GWForm;

    fn add(self, rhs: &GWForm) -> GWForm {
        let mut classes = self.classes.clone();
        for (c, n) in &rhs.classes {
            *classes.entry(c.clone()).or_insert(0) += n;
        }
        let mut out = GWForm { classes, hyper: self.hyper + rhs.hyper };
        out.reduce();
        out
    }
}

impl Add for GWForm {
    type Output = GWForm;

    fn add(self, rhs: GWForm) -> GWForm {
        &self + &rhs
    }
}

impl Mul for &GWForm {
    type Output = GWForm;

    /// Ring product: rank-one classes multiply as square classes,
    /// `<a> ⊗ h = h`, and `h ⊗ h = 2h`.
    fn mul(self, rhs: &GWForm) -> GWForm {
        let mut classes: BTreeMap<SquareClass, u64> = BTreeMap::new();
        for (a, na) in &self.classes {
            for (b, nb) in &rhs.classes {
                *classes.entry(a.mul(b)).or_insert(0) += na * nb;
            }
        }
        let hyper = self.class_count() * rhs.hyper
            + rhs.class_count() * self.hyper
            + 2 * self.hyper * rhs.hyper;
        let mut out = GWForm { classes, hyper };
        out.reduce();
        out
    }
}

impl Mul for GWForm {
    type Output = GWForm;

    fn mul(self, rhs: GWForm) -> GWForm {
        &self * &rhs
    }
}

impl fmt::Display for GWForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (c, n) in &self.classes {
            if *n == 1 {
                parts.push(format!("{c}"));
            } else {
                parts.push(format!("{n}{c}"));
            }
        }
        if self.hyper == 1 {
            parts.push("h".to_string());
        } else if self.hyper > 1 {
            parts.push(format!("{}h", self.hyper));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Wire shape: classes listed with multiplicity expanded, plus derived
/// rank/signature fields for readers that do not recompute them.
#[derive(Serialize, Deserialize)]
struct GWFormWire {
    classes: Vec<SquareClass>,
    hyper: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<i64>,
}

impl Serialize for GWForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut classes = Vec::new();
        for (c, n) in &self.classes {
            for _ in 0..*n {
                classes.push(c.clone());
            }
        }
        let wire = GWFormWire {
            classes,
            hyper: self.hyper,
            rank: Some(self.rank()),
            signature: self.signature().ok(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GWForm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = GWFormWire::deserialize(deserializer)?;
        let mut form = GWForm::from_classes(wire.classes);
        form.hyper += wire.hyper;
        Ok(form)
    }
}

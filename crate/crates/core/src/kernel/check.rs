use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::TSeries;

/// Outcome of comparing two series through a given order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub parameters: String,
    pub order: i64,
    /// First exponent at which the two sides differ.
    pub first_bad_coefficient: Option<i64>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.first_bad_coefficient.is_none()
    }

    /// Compares `lhs` and `rhs` through `order`.
    pub fn compare(
        identity: impl Into<String>,
        parameters: impl Into<String>,
        lhs: &TSeries,
        rhs: &TSeries,
        order: i64,
    ) -> Result<Self> {
        Ok(Self {
            identity: identity.into(),
            parameters: parameters.into(),
            order,
            first_bad_coefficient: lhs.first_difference(rhs, order)?,
        })
    }

    /// `residual` must vanish through `order`.
    pub fn vanishes(
        identity: impl Into<String>,
        parameters: impl Into<String>,
        residual: &TSeries,
        order: i64,
    ) -> Result<Self> {
        Self::compare(identity, parameters, residual, &TSeries::zero(order), order)
    }

    pub fn into_result(self) -> Result<Self> {
        match self.first_bad_coefficient {
            None => Ok(self),
            Some(index) => Err(Error::Identity {
                identity: format!("{} [{}]", self.identity, self.parameters),
                index,
            }),
        }
    }
}

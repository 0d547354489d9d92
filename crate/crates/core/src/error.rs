//! Crate-wide error type.
//!
//! The calculus is deliberately closed: any request that falls outside the
//! supported rewrite tables is reported loudly instead of being silently
//! dropped or guessed at.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// Division by the zero rational function.
    DivisionByZero,
    /// A substitution made a denominator vanish.
    DenominatorVanishes,
    /// A pairing or product of classes that the rewrite table does not define.
    ProductNotInCalculus(String),
    /// An operation received a class of the wrong degree.
    WrongDegree { expected: u32, got: u32 },
    /// Sheaf operands live on different curves.
    MixedCurves,
    /// Bundle type or degree data inconsistent with the requested operation.
    TypeMismatch(String),
    /// An integer quantity required to be even was odd.
    ParityViolation(String),
    /// Numeric input outside the operation's stated preconditions.
    ConstraintViolation(String),
    /// A symbolic pipeline did not reproduce its expected closed form.
    PipelineMismatch(String),
    /// Attempted to extract a coefficient in a variable the denominator depends on.
    NonConstantDenominator(&'static str),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::DivisionByZero => write!(f, "division by the zero rational function"),
            EngineError::DenominatorVanishes => {
                write!(f, "substitution makes a denominator vanish")
            }
            EngineError::ProductNotInCalculus(what) => {
                write!(f, "product not in calculus: {what}")
            }
            EngineError::WrongDegree { expected, got } => {
                write!(f, "wrong degree: expected {expected}, got {got}")
            }
            EngineError::MixedCurves => write!(f, "sheaf operands live on different curves"),
            EngineError::TypeMismatch(what) => write!(f, "type mismatch: {what}"),
            EngineError::ParityViolation(what) => write!(f, "parity violation: {what}"),
            EngineError::ConstraintViolation(what) => write!(f, "constraint violation: {what}"),
            EngineError::PipelineMismatch(what) => write!(f, "pipeline mismatch: {what}"),
            EngineError::NonConstantDenominator(var) => {
                write!(f, "denominator depends on {var}; coefficient extraction undefined")
            }
        }
    }
}

impl core::error::Error for EngineError {}

pub type Result<T> = core::result::Result<T, EngineError>;

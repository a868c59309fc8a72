use core::fmt;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A β-window shorter than the partition it should hold.
    WindowTooSmall { len: usize, needed: usize },
    /// The bead list is not strictly decreasing.
    InvalidWindow,
    /// Parts were not weakly decreasing and positive.
    InvalidPartition,
    /// Two partitions of different sizes were compared.
    SizeMismatch { left: usize, right: usize },
    /// Objects built over different quivers were combined.
    QuiverMismatch,
    /// Multipartition and charge disagree on the level.
    LevelMismatch { expected: usize, found: usize },
    /// A vector is not in the span of the classical simple roots.
    NotInRootLattice,
    /// Canonicalization needs a strictly positive level on every component.
    NonPositiveLevel,
    /// No `δ`-normalized weight is defined for this configuration.
    NoDeltaNormalization,
    /// The 2-core is not the staircase the Ennola map expects.
    CoreMismatch { expected: u32 },
    /// The operation needs a finite quiver order.
    InfiniteOrder,
    /// The operation is only defined for odd `e`.
    EvenOrder,
    /// `e` outside the supported range.
    BadOrder(u32),
    /// Blocks over different `e` were compared.
    MixedOrder,
    /// The partition is not weakly cuspidal.
    NotWeaklyCuspidal,
    /// Malformed core tuple for a block.
    InvalidBlock,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::WindowTooSmall { len, needed } => {
                write!(f, "window of length {len} cannot hold a partition of length {needed}")
            }
            Error::InvalidWindow => f.write_str("bead window must be strictly decreasing"),
            Error::InvalidPartition => f.write_str("parts must be positive and weakly decreasing"),
            Error::SizeMismatch { left, right } => {
                write!(f, "partitions of different sizes ({left} and {right})")
            }
            Error::QuiverMismatch => f.write_str("operands live over different quivers"),
            Error::LevelMismatch { expected, found } => {
                write!(f, "expected {expected} components, found {found}")
            }
            Error::NotInRootLattice => f.write_str("vector is not in the classical root lattice"),
            Error::NonPositiveLevel => f.write_str("weight has non-positive level"),
            Error::NoDeltaNormalization => {
                f.write_str("no delta normalization for this configuration; use the classical weight")
            }
            Error::CoreMismatch { expected } => {
                write!(f, "2-core is not the staircase of length {expected}")
            }
            Error::InfiniteOrder => f.write_str("operation needs a finite quiver order"),
            Error::EvenOrder => f.write_str("operation needs an odd order e"),
            Error::BadOrder(e) => write!(f, "unsupported order e = {e}"),
            Error::MixedOrder => f.write_str("blocks over different e"),
            Error::NotWeaklyCuspidal => f.write_str("partition is not weakly cuspidal"),
            Error::InvalidBlock => f.write_str("core tuple must have e entries summing to 0"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

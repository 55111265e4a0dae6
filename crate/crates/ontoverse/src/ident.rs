//! Shared lexical rule for the identifier newtypes used across the crate.

/// True iff `s` is a letter followed by letters, digits, or underscores.
pub(crate) fn is_valid(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Declares a string newtype validated by [`is_valid`].
///
/// Equality and ordering are exact (case-sensitive) string comparison.
macro_rules! ident_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(name: impl Into<String>) -> Result<Self, $crate::error::Error> {
                let name = name.into();
                if $crate::ident::is_valid(&name) {
                    Ok(Self(name))
                } else {
                    Err($crate::error::Error::InvalidIdentifier(name))
                }
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl std::str::FromStr for $name {
            type Err = $crate::error::Error;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                Self::new(s)
            }
        }
    };
}

pub(crate) use ident_type;

//! Tokenizer shared by the formula, theory, program, and proof parsers.
//!
//! `%` starts a comment running to the end of the line.  Keywords are not
//! distinguished here; parsers interpret identifiers in context.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    /// Lowercase-initial identifier (atom, predicate, or keyword).
    Ident(String),
    /// Uppercase-initial identifier (rule or index variable).
    Var(String),
    Nat(u64),
    Arrow,
    Iff,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Colon,
    ColonDash,
    Dot,
    DotDot,
    Turnstile,
    Neq,
    HashFalse,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "{s}"),
            Token::Var(s) => write!(f, "{s}"),
            Token::Nat(n) => write!(f, "{n}"),
            Token::Arrow => f.write_str("->"),
            Token::Iff => f.write_str("<->"),
            Token::LBrace => f.write_str("{"),
            Token::RBrace => f.write_str("}"),
            Token::LParen => f.write_str("("),
            Token::RParen => f.write_str(")"),
            Token::Comma => f.write_str(","),
            Token::Semi => f.write_str(";"),
            Token::Colon => f.write_str(":"),
            Token::ColonDash => f.write_str(":-"),
            Token::Dot => f.write_str("."),
            Token::DotDot => f.write_str(".."),
            Token::Turnstile => f.write_str("|-"),
            Token::Neq => f.write_str("!="),
            Token::HashFalse => f.write_str("#false"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub line: usize,
    pub col: usize,
}

/// Position-annotated syntax error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn tokenize(input: &str) -> Result<Vec<Spanned>, ParseError> {
    tokenize_at(input, 1)
}

/// Tokenize with positions starting at the given line (for line-oriented
/// formats parsed one record at a time).
pub fn tokenize_at(input: &str, start_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    let mut line = start_line;
    let mut col = 1;

    macro_rules! push {
        ($tok:expr, $len:expr) => {{
            out.push(Spanned {
                token: $tok,
                line,
                col,
            });
            i += $len;
            col += $len;
        }};
    }

    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            b' ' | b'\t' | b'\r' => {
                i += 1;
                col += 1;
            }
            b'%' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let text = &input[start..i];
                let token = if c.is_ascii_lowercase() {
                    Token::Ident(text.to_string())
                } else {
                    Token::Var(text.to_string())
                };
                out.push(Spanned { token, line, col });
                col += i - start;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let value: u64 = text
                    .parse()
                    .map_err(|_| ParseError::new(line, col, format!("number {text} is too large")))?;
                out.push(Spanned {
                    token: Token::Nat(value),
                    line,
                    col,
                });
                col += i - start;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => push!(Token::Arrow, 2),
            b'<' if input[i..].starts_with("<->") => push!(Token::Iff, 3),
            b'|' if bytes.get(i + 1) == Some(&b'-') => push!(Token::Turnstile, 2),
            b'!' if bytes.get(i + 1) == Some(&b'=') => push!(Token::Neq, 2),
            b':' if bytes.get(i + 1) == Some(&b'-') => push!(Token::ColonDash, 2),
            b':' => push!(Token::Colon, 1),
            b'.' if bytes.get(i + 1) == Some(&b'.') => push!(Token::DotDot, 2),
            b'.' => push!(Token::Dot, 1),
            b'{' => push!(Token::LBrace, 1),
            b'}' => push!(Token::RBrace, 1),
            b'(' => push!(Token::LParen, 1),
            b')' => push!(Token::RParen, 1),
            b',' => push!(Token::Comma, 1),
            b';' => push!(Token::Semi, 1),
            b'#' => {
                if input[i..].starts_with("#false") {
                    push!(Token::HashFalse, 6)
                } else {
                    return Err(ParseError::new(line, col, "expected #false"));
                }
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character {:?}", other as char),
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let toks = tokenize("p -> q(a,1) %ignored\n|- X != Y").unwrap();
        let kinds: Vec<Token> = toks.iter().map(|s| s.token.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Token::Ident("p".into()),
                Token::Arrow,
                Token::Ident("q".into()),
                Token::LParen,
                Token::Ident("a".into()),
                Token::Comma,
                Token::Nat(1),
                Token::RParen,
                Token::Turnstile,
                Token::Var("X".into()),
                Token::Neq,
                Token::Var("Y".into()),
            ]
        );
        assert_eq!((toks[8].line, toks[8].col), (2, 1));
    }

    #[test]
    fn rule_punctuation() {
        let toks = tokenize("q :- 1..2 #false.").unwrap();
        let kinds: Vec<Token> = toks.into_iter().map(|s| s.token).collect();
        assert_eq!(
            kinds,
            vec![
                Token::Ident("q".into()),
                Token::ColonDash,
                Token::Nat(1),
                Token::DotDot,
                Token::Nat(2),
                Token::HashFalse,
                Token::Dot,
            ]
        );
    }

    #[test]
    fn rejects_stray_characters() {
        assert!(tokenize("p & q").is_err());
        assert!(tokenize("#true").is_err());
        assert!(tokenize("p - q").is_err());
    }
}

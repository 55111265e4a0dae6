//! Recursive-descent parser for the concrete sentence syntax.
//!
//! ClassBox: `SubClassOf(A, B)` and `DisjointWith(A, B)`.
//!
//! PropLogic: infix formulas over identifiers with `true`/`false`
//! constants; binding strength, loosest to tightest: `<->`, `->`, `|`,
//! `&`, `~`. Implication and biconditional associate to the right,
//! conjunction and disjunction to the left.
//!
//! The printers are the `Display` impls on the sentence types; the parser
//! and printers round-trip.

use crate::logic::{ClassBoxSentence, Logic, PropFormula, Sentence, SymbolId};

/// Parses a sentence in the concrete syntax of the given logic. Errors are
/// plain messages; callers attach line numbers.
pub fn parse(text: &str, logic: Logic) -> Result<Sentence, String> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let sentence = match logic {
        Logic::PropLogic => Sentence::Prop(parser.formula()?),
        Logic::ClassBox => Sentence::ClassBox(parser.class_axiom()?),
    };
    parser.expect_end()?;
    Ok(sentence)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Comma,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::True => "`true`".into(),
            Token::False => "`false`".into(),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            ',' => {
                tokens.push(Token::Comma);
                i += 1;
            }
            '~' => {
                tokens.push(Token::Not);
                i += 1;
            }
            '&' => {
                tokens.push(Token::And);
                i += 1;
            }
            '|' => {
                tokens.push(Token::Or);
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    tokens.push(Token::Implies);
                    i += 2;
                } else {
                    return Err("expected `->`".into());
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    tokens.push(Token::Iff);
                    i += 3;
                } else {
                    return Err("expected `<->`".into());
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                tokens.push(match word {
                    "true" => Token::True,
                    "false" => Token::False,
                    _ => Token::Ident(word.to_string()),
                });
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.pos).cloned();
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn eat(&mut self, expected: &Token) -> bool {
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, expected: Token) -> Result<(), String> {
        match self.next() {
            Some(token) if token == expected => Ok(()),
            Some(token) => Err(format!(
                "expected {}, found {}",
                expected.describe(),
                token.describe()
            )),
            None => Err(format!("expected {}, found end of input", expected.describe())),
        }
    }

    fn expect_end(&mut self) -> Result<(), String> {
        match self.peek() {
            None => Ok(()),
            Some(token) => Err(format!("unexpected {} after sentence", token.describe())),
        }
    }

    fn ident(&mut self) -> Result<SymbolId, String> {
        match self.next() {
            Some(Token::Ident(name)) => SymbolId::new(name).map_err(|e| e.to_string()),
            Some(token) => Err(format!("expected identifier, found {}", token.describe())),
            None => Err("expected identifier, found end of input".into()),
        }
    }

    // iff := imp ('<->' iff)?
    fn formula(&mut self) -> Result<PropFormula, String> {
        let lhs = self.implication()?;
        if self.eat(&Token::Iff) {
            let rhs = self.formula()?;
            return Ok(PropFormula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    // imp := or ('->' imp)?
    fn implication(&mut self) -> Result<PropFormula, String> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Implies) {
            let rhs = self.implication()?;
            return Ok(PropFormula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    // or := and ('|' and)*
    fn disjunction(&mut self) -> Result<PropFormula, String> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Token::Or) {
            let rhs = self.conjunction()?;
            lhs = PropFormula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    // and := unary ('&' unary)*
    fn conjunction(&mut self) -> Result<PropFormula, String> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::And) {
            let rhs = self.unary()?;
            lhs = PropFormula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    // unary := '~' unary | atom
    fn unary(&mut self) -> Result<PropFormula, String> {
        if self.eat(&Token::Not) {
            return Ok(PropFormula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<PropFormula, String> {
        match self.next() {
            Some(Token::True) => Ok(PropFormula::True),
            Some(Token::False) => Ok(PropFormula::False),
            Some(Token::Ident(name)) => {
                Ok(PropFormula::Atom(SymbolId::new(name).map_err(|e| e.to_string())?))
            }
            Some(Token::LParen) => {
                let inner = self.formula()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(token) => Err(format!("expected a formula, found {}", token.describe())),
            None => Err("expected a formula, found end of input".into()),
        }
    }

    fn class_axiom(&mut self) -> Result<ClassBoxSentence, String> {
        let head = match self.next() {
            Some(Token::Ident(name)) => name,
            Some(token) => {
                return Err(format!(
                    "expected `SubClassOf` or `DisjointWith`, found {}",
                    token.describe()
                ))
            }
            None => return Err("expected `SubClassOf` or `DisjointWith`".into()),
        };
        self.expect(Token::LParen)?;
        let first = self.ident()?;
        self.expect(Token::Comma)?;
        let second = self.ident()?;
        self.expect(Token::RParen)?;
        match head.as_str() {
            "SubClassOf" => Ok(ClassBoxSentence::SubClassOf(first, second)),
            "DisjointWith" => Ok(ClassBoxSentence::DisjointWith(first, second)),
            other => Err(format!(
                "expected `SubClassOf` or `DisjointWith`, found identifier `{other}`"
            )),
        }
    }
}

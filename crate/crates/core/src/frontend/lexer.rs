//! Tokenizer for the Java subset.

use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Reserved words recognized by the tokenizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Keyword {
    If,
    Else,
    While,
    Break,
    Continue,
    Return,
    Public,
    Static,
    Class,
    Int,
    Boolean,
    Long,
    Short,
    Byte,
    Char,
    Float,
    Double,
    Void,
}

impl Keyword {
    fn from_word(word: &str) -> Option<Keyword> {
        Some(match word {
            "if" => Keyword::If,
            "else" => Keyword::Else,
            "while" => Keyword::While,
            "break" => Keyword::Break,
            "continue" => Keyword::Continue,
            "return" => Keyword::Return,
            "public" => Keyword::Public,
            "static" => Keyword::Static,
            "class" => Keyword::Class,
            "int" => Keyword::Int,
            "boolean" => Keyword::Boolean,
            "long" => Keyword::Long,
            "short" => Keyword::Short,
            "byte" => Keyword::Byte,
            "char" => Keyword::Char,
            "float" => Keyword::Float,
            "double" => Keyword::Double,
            "void" => Keyword::Void,
            _ => return None,
        })
    }

    /// Whether this keyword names a primitive type usable as a type reference.
    pub fn is_type(self) -> bool {
        matches!(
            self,
            Keyword::Int
                | Keyword::Boolean
                | Keyword::Long
                | Keyword::Short
                | Keyword::Byte
                | Keyword::Char
                | Keyword::Float
                | Keyword::Double
                | Keyword::Void
        )
    }

    /// The source spelling of the keyword.
    pub fn text(self) -> &'static str {
        match self {
            Keyword::If => "if",
            Keyword::Else => "else",
            Keyword::While => "while",
            Keyword::Break => "break",
            Keyword::Continue => "continue",
            Keyword::Return => "return",
            Keyword::Public => "public",
            Keyword::Static => "static",
            Keyword::Class => "class",
            Keyword::Int => "int",
            Keyword::Boolean => "boolean",
            Keyword::Long => "long",
            Keyword::Short => "short",
            Keyword::Byte => "byte",
            Keyword::Char => "char",
            Keyword::Float => "float",
            Keyword::Double => "double",
            Keyword::Void => "void",
        }
    }
}

/// One lexical token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    IntLit(BigUint),
    Kw(Keyword),
    Star,
    Minus,
    Plus,
    Slash,
    Less,
    Greater,
    Assign,
    MinusMinus,
    PlusPlus,
    PlusAssign,
    EqEq,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Semi,
    Colon,
    Comma,
}

impl TokenKind {
    /// Human-readable description for diagnostics.
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("identifier '{name}'"),
            TokenKind::IntLit(n) => format!("integer literal {n}"),
            TokenKind::Kw(kw) => format!("'{}'", kw.text()),
            TokenKind::Star => "'*'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Slash => "'/'".into(),
            TokenKind::Less => "'<'".into(),
            TokenKind::Greater => "'>'".into(),
            TokenKind::Assign => "'='".into(),
            TokenKind::MinusMinus => "'--'".into(),
            TokenKind::PlusPlus => "'++'".into(),
            TokenKind::PlusAssign => "'+='".into(),
            TokenKind::EqEq => "'=='".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::LBrace => "'{'".into(),
            TokenKind::RBrace => "'}'".into(),
            TokenKind::Semi => "';'".into(),
            TokenKind::Colon => "':'".into(),
            TokenKind::Comma => "','".into(),
        }
    }
}

/// A token with its source position (1-based line and column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: u32,
    pub col: u32,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    col: u32,
}

impl Cursor {
    fn new(source: &str) -> Cursor {
        Cursor {
            chars: source.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.bump();
            true
        } else {
            false
        }
    }
}

/// Tokenize source text.
///
/// Two-character operators win over their one-character prefixes, so
/// `+==` lexes as `+=` followed by `=`. Whitespace and `//` comments
/// are skipped.
pub fn tokenize(source: &str) -> Result<Vec<Token>> {
    let mut cur = Cursor::new(source);
    let mut tokens = Vec::new();

    while let Some(ch) = cur.peek() {
        let (line, col) = (cur.line, cur.col);

        if ch.is_whitespace() {
            cur.bump();
            continue;
        }

        if ch == '/' {
            cur.bump();
            if cur.eat('/') {
                while let Some(c) = cur.peek() {
                    if c == '\n' {
                        break;
                    }
                    cur.bump();
                }
                continue;
            }
            tokens.push(Token {
                kind: TokenKind::Slash,
                line,
                col,
            });
            continue;
        }

        let kind = if ch.is_ascii_alphabetic() || ch == '_' {
            let mut word = String::new();
            while let Some(c) = cur.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(cur.bump());
                } else {
                    break;
                }
            }
            match Keyword::from_word(&word) {
                Some(kw) => TokenKind::Kw(kw),
                None => TokenKind::Ident(word),
            }
        } else if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(c) = cur.peek() {
                if c.is_ascii_digit() {
                    digits.push(cur.bump());
                } else {
                    break;
                }
            }
            let value: BigUint = digits.parse().expect("digit run parses as an integer");
            TokenKind::IntLit(value)
        } else {
            match ch {
                '*' => {
                    cur.bump();
                    TokenKind::Star
                }
                '-' => {
                    cur.bump();
                    if cur.eat('-') {
                        TokenKind::MinusMinus
                    } else {
                        TokenKind::Minus
                    }
                }
                '+' => {
                    cur.bump();
                    if cur.eat('+') {
                        TokenKind::PlusPlus
                    } else if cur.eat('=') {
                        TokenKind::PlusAssign
                    } else {
                        TokenKind::Plus
                    }
                }
                '<' => {
                    cur.bump();
                    TokenKind::Less
                }
                '>' => {
                    cur.bump();
                    TokenKind::Greater
                }
                '=' => {
                    cur.bump();
                    if cur.eat('=') {
                        TokenKind::EqEq
                    } else {
                        TokenKind::Assign
                    }
                }
                '(' => {
                    cur.bump();
                    TokenKind::LParen
                }
                ')' => {
                    cur.bump();
                    TokenKind::RParen
                }
                '{' => {
                    cur.bump();
                    TokenKind::LBrace
                }
                '}' => {
                    cur.bump();
                    TokenKind::RBrace
                }
                ';' => {
                    cur.bump();
                    TokenKind::Semi
                }
                ':' => {
                    cur.bump();
                    TokenKind::Colon
                }
                ',' => {
                    cur.bump();
                    TokenKind::Comma
                }
                other => {
                    return Err(Error::UnknownCharacter {
                        ch: other,
                        line,
                        col,
                    })
                }
            }
        };

        tokens.push(Token { kind, line, col });
    }

    Ok(tokens)
}

use super::{ExprError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(s) | Tok::Ident(s) => format!("`{s}`"),
            Tok::End => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            _ => "",
        }
    }
}

pub(crate) fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = Pos { line, col };
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            col += 1;
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            out.push((Tok::Int(chars[start..k].iter().collect()), pos));
            col += k - start;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = k;
            let word = |k: &mut usize| {
                while *k < chars.len() && (chars[*k].is_ascii_alphanumeric() || chars[*k] == '_') {
                    *k += 1;
                }
            };
            word(&mut k);
            // dotted atoms such as `sigma.L`
            if k + 1 < chars.len() && chars[k] == '.' && chars[k + 1].is_ascii_alphabetic() {
                k += 1;
                word(&mut k);
            }
            out.push((Tok::Ident(chars[start..k].iter().collect()), pos));
            col += k - start;
            continue;
        }
        return Err(ExprError::Syntax { line, col, msg: format!("unexpected character {c:?}") });
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

fn main() {
    match ddcat_cli::table231_current() {
        Ok(s) => print!("{s}"),
        Err(e) => { eprintln!("{e}"); std::process::exit(1); }
    }
}

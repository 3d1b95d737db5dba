fn main() {
    std::process::exit(foxcol_cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(giwb_cli::run(std::env::args_os()));
}

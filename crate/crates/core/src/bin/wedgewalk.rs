fn main() {
    std::process::exit(wedgewalk::cli::run(std::env::args_os()));
}

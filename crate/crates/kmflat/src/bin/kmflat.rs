fn main() {
    std::process::exit(kmflat::cli::run(std::env::args_os()));
}

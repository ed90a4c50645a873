void m(int i) {
    outer: while (i > 0) {
        while (i > 1) {
            continue outer;
        }
        break outer;
    }
}

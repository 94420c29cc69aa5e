class Sample {
    int total;

    Sample(int a) {
        this.total = a > 0 ? a : compute(a);
    }

    static int m0(int a, int b) {
        for (int i = 0; i < b; i++) {
            Runnable r6 = () -> {
                if (helper.apply(b) || helper.apply(b)) {
                    total = '?';
                }
                // if (a || b) while (c) call();
            };
            Runnable r8 = () -> {
                while (done) {
                    // if (a || b) while (c) call();
                    n = "if (x && y) { ok(); }";
                }
                // if (a || b) while (c) call();
                if (total > 3 && total == b) {
                    // if (a || b) while (c) call();
                }
            };
        }
        do {
            this.log();
        } while (helper.next(1, 0) || total == n || done);
        return 0;
    }
}

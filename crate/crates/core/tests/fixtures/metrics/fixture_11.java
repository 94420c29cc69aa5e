class Sample {
    int total;

    private int m0(int a, int b) {
        switch (a) {
            case 0:
                while (this.compute("if (x && y) { ok(); }", a - 1) || total > 8) {
                    int v68 = n;
                    for (Item it : items) {
                        apply(helper.size(total));
                        b = helper.size(0);
                        // if (a || b) while (c) call();
                    }
                }
                break;
            case 1:
                while (done) {
                    // if (a || b) while (c) call();
                }
                break;
            default:
                items.next(new Box(n));
        }
        if (b == b || done || done) {
            if (apply(a * b, a) && total == a) {
                if (n > 7) {
                    int v21 = size(new Box(42));
                    a = new Box(new Box('?'));
                    int v6 = b;
                } else if (done && done) {
                    items.size(a);
                    this.check(new Box('?'));
                } else {
                    a = done ? new Box(a + a) : 0;
                    int v98 = total;
                }
            } else if (done || compute()) {
                this.check(new Box(0));
                while (this.compute(total, "if (x && y) { ok(); }")) {
                    b = new Box(n);
                    apply("if (x && y) { ok(); }");
                }
                // if (a || b) while (c) call();
            } else {
                n = log();
            }
        }
        return total;
    }

    static int m1(int a, int b) {
        switch (total) {
            case 0:
                for (int i = 0; i < n; i++) {
                    Runnable r1 = () -> {
                        this.apply(total);
                        a = total;
                        int v92 = items.size(done ? total * b : total);
                    };
                    items.check();
                }
                break;
            case 1:
                // if (a || b) while (c) call();
                break;
            case 2:
                Runnable r8 = () -> {
                    for (int i = 0; i < a; i++) {
                        int v35 = b - 1;
                        apply();
                        helper.apply('?');
                    }
                    switch (a) {
                        case 0:
                            n = b == n ? 0 : a;
                            break;
                        case 1:
                            int v15 = compute(helper.apply(a - a));
                            break;
                        case 2:
                            // if (a || b) while (c) call();
                            break;
                        default:
                            this.compute();
                    }
                    if (n > 0 || a == a) {
                        b = b + 1;
                        // if (a || b) while (c) call();
                        int v15 = 1;
                    } else if (b == total && done) {
                        helper.size(a == n ? b : total);
                        this.check(log());
                    } else {
                        next();
                    }
                };
                break;
            default:
                compute();
        }
        check(b > 8 || done || b > 8 ? b : 0, new Box(n - 1));
        return 42;
    }
}

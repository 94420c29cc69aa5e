class Sample {
    int total;

    static int m0(int a, int b) {
        for (int i = 0; i < total; i++) {
            n = 0;
            if (a > 2) {
                while (apply()) {
                    this.apply(size(total + a, a));
                }
            } else if (done) {
                helper.apply();
            } else {
                switch (a) {
                    case 0:
                        a = n;
                        break;
                    case 1:
                        total = a - 1;
                        break;
                    default:
                        apply(n == a ? 42 : total * 1);
                }
                for (Item it : items) {
                    // if (a || b) while (c) call();
                    b = new Box(compute(total, n));
                    b = b * 1;
                }
            }
        }
        for (Item it : items) {
            if (n == b && n == b) {
                while (items.check()) {
                    compute(a * a);
                }
                if (next() && total > 2) {
                    int v25 = 0;
                    b = done ? next() : total == total || total == total ? b - 1 : 1;
                } else if (check() || done) {
                    log(1);
                    a = 42;
                    // if (a || b) while (c) call();
                } else {
                    this.next(total > 0 && done || b == a ? total : b);
                }
                int v56 = "if (x && y) { ok(); }";
            }
        }
        // if (a || b) while (c) call();
        return apply(total + a, b + 1) ? new Box(total - 1) : n;
    }

    int m1(int a, int b) {
        for (int i = 0; i < n; i++) {
            Runnable r3 = () -> {
                int v14 = done ? a * b : n;
            };
            total = total * 1;
            for (Item it : items) {
                // if (a || b) while (c) call();
                // if (a || b) while (c) call();
            }
        }
        if (a > 8 && a > 8) {
            Runnable r5 = () -> {
                switch (b) {
                    case 0:
                        n = 42;
                        break;
                    case 1:
                        // if (a || b) while (c) call();
                        break;
                    case 2:
                        int v68 = helper.next();
                        break;
                    default:
                        this.size();
                }
            };
            Runnable r3 = () -> {
                for (int i = 0; i < a; i++) {
                    // if (a || b) while (c) call();
                }
                if (done && done) {
                    compute();
                    a = total;
                }
            };
        } else if (a == n || a == n || a == n) {
            apply();
            b = total;
            if (done) {
                do {
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                    int v77 = new Box(helper.next(b, b));
                } while (this.compute());
            } else if (helper.apply(a + total, 42) || n == a && a > 4) {
                do {
                    // if (a || b) while (c) call();
                    size();
                } while (helper.apply() || total > 8);
            } else {
                a = '?';
            }
        } else {
            while (done) {
                a = b == n || total > 6 ? "if (x && y) { ok(); }" : new Box(total);
                for (Item it : items) {
                    compute(n == a && n == a ? 0 : '?');
                }
            }
            this.compute(n > 6 ? total * 1 : a, total);
            if (total == a || total == a) {
                for (Item it : items) {
                    this.compute(total + b);
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                }
            } else if (n > 5) {
                if (a > 2 && total == n) {
                    // if (a || b) while (c) call();
                    int v21 = n;
                }
                int v31 = check(b);
            } else {
                // if (a || b) while (c) call();
            }
        }
        return new Box("if (x && y) { ok(); }");
    }
}

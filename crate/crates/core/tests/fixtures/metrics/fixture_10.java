class Sample {
    int total;

    Sample(int a) {
        this.total = a > 0 ? a : compute(a);
    }

    public void m0(int a, int b) {
        while (done && check()) {
            do {
                if (a > 0) {
                    a = a > 1 ? done ? 1 : 0 : total == a ? b : total - 1;
                    total = new Box(new Box(n));
                } else if (b > 3) {
                    a = done && total > 3 && size(total - b) ? total : b > 6 && done && b > 6 ? b + b : '?';
                } else {
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                }
                Runnable r2 = () -> {
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                };
                n = total > 9 || total > 9 ? total : a == b || a == b || a == b ? b * 1 : 1;
            } while (items.apply("if (x && y) { ok(); }"));
            int v67 = n;
        }
    }

    static int m1(int a, int b) {
        if (items.size() || items.size() && b == a) {
            // if (a || b) while (c) call();
            do {
                switch (total) {
                    case 0:
                        items.compute(b);
                        break;
                    case 1:
                        // if (a || b) while (c) call();
                        break;
                    default:
                        log(new Box(b + 1), new Box('?'));
                }
                switch (n) {
                    case 0:
                        next(b, new Box(b - n));
                        break;
                    default:
                        items.log();
                }
            } while (n > 8 || n > 8);
            if (done || total > 4 && total > 4) {
                for (Item it : items) {
                    n = new Box(new Box(a));
                }
            } else if (done && a > 7) {
                if (a == total || a == total || items.compute()) {
                    int v26 = new Box(a);
                }
                total = total;
            } else {
                // if (a || b) while (c) call();
            }
        }
        Runnable r4 = () -> {
            for (Item it : items) {
                for (Item it : items) {
                    b = new Box(n);
                }
                if (b > 3) {
                    this.size(a * 1, done && total > 6 ? a * 1 : 1);
                    items.next(new Box(a));
                } else if (total == n && total == n) {
                    int v3 = n - total;
                } else {
                    int v4 = new Box(a - 1);
                }
            }
            if (this.check() && this.check() && n == a) {
                int v39 = new Box("if (x && y) { ok(); }");
            } else if (done) {
                do {
                    // if (a || b) while (c) call();
                } while (apply(b - 1) && apply(b - 1));
            } else {
                if (b > 1 || done || check('?')) {
                    int v91 = total;
                    // if (a || b) while (c) call();
                }
                for (Item it : items) {
                    check(a == a ? b + 1 : "if (x && y) { ok(); }");
                    int v25 = done ? 42 : b;
                    b = a;
                }
            }
            while (b > 7 && b > 7 || done) {
                while (total == total) {
                    n = 1;
                }
                for (int i = 0; i < n; i++) {
                    helper.compute();
                }
            }
        };
        do {
            try {
                int v78 = '?';
                apply("if (x && y) { ok(); }");
            } catch (Exception e) {
                do {
                    int v26 = compute(new Box(b - b));
                    int v79 = items.size();
                } while (this.apply(n * total, b));
            } catch (RuntimeException e) {
                for (Item it : items) {
                    int v62 = this.apply(a);
                    // if (a || b) while (c) call();
                    helper.size();
                }
                Runnable r9 = () -> {
                    this.log();
                    items.size();
                };
                total = total > 0 || done ? b : b + 1;
            }
        } while (log("if (x && y) { ok(); }") && log("if (x && y) { ok(); }"));
        switch (a) {
            case 0:
                if (n > 2) {
                    while (a == b) {
                        items.next(new Box(0));
                        compute(a, items.apply(n * a, total - 1));
                        next(a * 1);
                    }
                    while (done) {
                        int v33 = done ? total == b && done || done ? 42 : '?' : size(0, 0);
                    }
                }
                break;
            default:
                items.log();
        }
        return total + b;
    }

    private int m2(int a, int b) {
        a = n * 1;
        for (Item it : items) {
            a = done || helper.log(total) && helper.log(total) ? size('?', '?') : b;
            int v92 = new Box(a);
            if (total > 1 && check(n, "if (x && y) { ok(); }")) {
                if (n == total) {
                    total = total * 1;
                    // if (a || b) while (c) call();
                }
                Runnable r8 = () -> {
                    a = new Box("if (x && y) { ok(); }");
                };
                Runnable r3 = () -> {
                    a = '?';
                    n = new Box(0);
                };
            }
        }
        return n;
    }
}
